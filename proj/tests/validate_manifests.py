#!/usr/bin/env python3
# Copyright 2026 The bsqrng Authors
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

"""Runs every manifest-writing CLI command and validates the manifests against
docs/manifest.schema.json. Also checks the recorded hashes against the files."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def fnv1a64(path):
    h = 0xCBF29CE484222325
    for b in pathlib.Path(path).read_bytes():
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def main(cli, source_dir):
    source = pathlib.Path(source_dir)
    schema = json.loads((source / "docs" / "manifest.schema.json").read_text())
    data = source / "data"
    with tempfile.TemporaryDirectory() as tmp:
        t = pathlib.Path(tmp)
        commands = [
            ["unitary", "--fixture-u5", "--out", t / "u5.json"],
            ["gen", data / "u5_generator.json", "--bits", "5000", "--out", t / "bits.bin"],
            ["dist", "--unitary", t / "u5.json", "--input", "1,1,0,0,0", "--out", t / "dist.csv"],
            ["entropy-sweep", "--mesh", data / "mesh5_seed2026.json", "--labels", "1I", "--input", "1,1,0,0,0",
             "--grid", "8", "--out", t / "sweep"],
            ["test", "--in", t / "bits.bin", "--out", t / "report.json"],
            ["rate", "--modes", "6", "--photons", "2", "--pairs", "500", "--out", t / "rate.json"],
            ["source-sweep", "--unitary", t / "u5.json", "--inputs", "1,1,0,0,0", "--bits", "2000", "--out",
             t / "ss.json"],
        ]
        for cmd in commands:
            subprocess.run([cli, *map(str, cmd)], check=True, stdout=subprocess.DEVNULL)
        manifests = sorted(t.rglob("*.manifest.json"))
        if len(manifests) != len(commands):
            sys.exit(f"expected {len(commands)} manifests, found {len(manifests)}")
        for m in manifests:
            doc = json.loads(m.read_text())
            jsonschema.validate(doc, schema)
            for kind in ("input_hashes", "output_hashes"):
                for path, digest in doc[kind].items():
                    if fnv1a64(path) != digest:
                        sys.exit(f"{m}: {kind} entry for {path} does not match the file")
        sidecar = json.loads((t / "bits.bin.json").read_text())
        assert sidecar == {"format": "packed", "bit_order": "msb_first", "bit_length": 5000}, sidecar
        print(f"validated {len(manifests)} manifests")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
