#!/usr/bin/env python3
# Copyright 2026 The ragged Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the golden containers in tests/golden using awkward's to_buffers.

Run once with awkward installed; the output is committed so the C++ tests
never need Python:

    python3 scripts/make_golden.py tests/golden
"""

import pathlib
import sys

import awkward as ak
import numpy as np


def write(root: pathlib.Path, name: str, layout) -> None:
    form, length, buffers = ak.to_buffers(layout)
    out = root / name
    (out / "buffers").mkdir(parents=True, exist_ok=True)
    (out / "form.json").write_text(form.to_json())
    (out / "length.txt").write_text(f"{length}\n")
    for key, buf in buffers.items():
        (out / "buffers" / key).write_bytes(np.asarray(buf).tobytes())


def main() -> None:
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
    c = ak.contents

    write(
        root,
        "list_offset",
        c.ListOffsetArray(
            ak.index.Index64(np.array([0, 3, 3, 5], dtype=np.int64)),
            c.NumpyArray(np.array([1.1, 2.2, 3.3, 4.4, 5.5])),
        ),
    )
    write(
        root,
        "record",
        c.RecordArray(
            [
                c.NumpyArray(np.arange(1, 6, dtype=np.int64)),
                c.NumpyArray(np.array([1.1, 2.2, 3.3, 4.4, 5.5])),
            ],
            ["a", "b"],
        ),
    )
    write(root, "empty_primitive", c.NumpyArray(np.array([], dtype=np.float64)))
    # Same values as list_offset, built from Python lists instead of layouts.
    write(root, "from_python", ak.to_layout(ak.Array([[1.1, 2.2, 3.3], [], [4.4, 5.5]])))


if __name__ == "__main__":
    main()
