#!/usr/bin/env python3
# Copyright 2026 The fwmsq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the synthetic data files under tests/data.

Deterministic (fixed seed). Run from the repository root:

    python3 scripts/gen_fixtures.py
"""

import pathlib

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
MALFORMED = DATA / "malformed"

SEED = 20260415

# Power scans: intensity-difference noise vs total detected optical power.
SCAN_RATIO = 0.135
SQL_SLOPE = 4.0e4          # noise units per watt
ELECTRONIC_FLOOR = 0.8     # noise units, same for both scans
SCAN_REL_NOISE = 2e-3      # multiplicative scatter per point

# Spectrum-analyzer traces.
RBW_HZ = 30000
VBW_HZ = 300
TRACE_POINTS = 1024


def fmt(x):
    return repr(float(x))


def write_scan(path, label, powers, noise):
    with open(path, "w") as f:
        f.write(f"# label={label}\n")
        f.write("optical_power_w,noise_linear\n")
        for p, n in zip(powers, noise):
            f.write(f"{fmt(p)},{fmt(n)}\n")


def write_trace(path, label, freq, dbm, extra=()):
    with open(path, "w") as f:
        f.write(f"# rbw_hz={RBW_HZ}\n# vbw_hz={VBW_HZ}\n# label={label}\n")
        for k, v in extra:
            f.write(f"# {k}={v}\n")
        f.write("freq_hz,power_dbm\n")
        for x, y in zip(freq, dbm):
            f.write(f"{fmt(x)},{fmt(y)}\n")


def dbm(watts):
    return 10.0 * np.log10(watts / 1e-3)


def watts(x_dbm):
    return 1e-3 * 10.0 ** (x_dbm / 10.0)


def power_scans(rng):
    powers = np.linspace(30e-6, 300e-6, 16)
    sql = ELECTRONIC_FLOOR + SQL_SLOPE * powers
    sq = ELECTRONIC_FLOOR + SCAN_RATIO * SQL_SLOPE * powers
    sql *= 1.0 + SCAN_REL_NOISE * rng.standard_normal(powers.size)
    sq *= 1.0 + SCAN_REL_NOISE * rng.standard_normal(powers.size)
    write_scan(DATA / "power_scan_sql.csv", "shot-noise limit", powers, sql)
    write_scan(DATA / "power_scan_squeezed.csv", "twin beams", powers, sq)

    # Self-check so a bad seed cannot slip through unnoticed.
    ratio = np.polyfit(powers, sq, 1)[0] / np.polyfit(powers, sql, 1)[0]
    assert abs(ratio / SCAN_RATIO - 1.0) < 0.01, ratio


def noise_spectra(rng):
    freq = np.linspace(10e3, 5e6, TRACE_POINTS)
    sql_w = watts(-80.0 + 0.3 * (freq / 5e6))
    # -8 dB at low frequency, relaxing to the SQL over a 1.8 MHz half-width.
    squeeze = 10.0 ** (-0.8)
    ds = 1.0 - (1.0 - squeeze) / (1.0 + (freq / 1.8e6) ** 2)
    el_w = watts(-95.0) * (1.0 + 20e3 / freq)
    sq_w = ds * (sql_w - el_w) + el_w

    # VBW << RBW: each displayed point averages ~RBW/VBW samples.
    scatter = 1.0 / np.sqrt(RBW_HZ / VBW_HZ)

    def noisy(w):
        return dbm(w * (1.0 + scatter * rng.standard_normal(w.size)))

    write_trace(DATA / "spectrum_squeezed.csv", "twin beams", freq, noisy(sq_w))
    write_trace(DATA / "spectrum_sql.csv", "shot-noise limit", freq, noisy(sql_w))
    write_trace(DATA / "spectrum_electronic.csv", "electronic floor", freq, noisy(el_w))


def flat_traces():
    freq = np.linspace(100e3, 3e6, 64)
    for name, level in (("flat_sql.csv", -80.0), ("flat_squeezed.csv", -88.0), ("flat_electronic.csv", -95.0)):
        write_trace(DATA / name, f"flat {level:g} dBm", freq, np.full(freq.size, level))


TRACE_OK_HEAD = "# rbw_hz=30000\n# vbw_hz=300\nfreq_hz,power_dbm\n"
SCAN_OK_HEAD = "# label=x\noptical_power_w,noise_linear\n"

MALFORMED_FILES = {
    "trace_missing_rbw.csv": "# vbw_hz=300\nfreq_hz,power_dbm\n1,-80\n2,-80\n",
    "trace_missing_header.csv": "# rbw_hz=30000\n# vbw_hz=300\n1,-80\n2,-80\n",
    "trace_wrong_header.csv": "# rbw_hz=30000\n# vbw_hz=300\nfrequency,power\n1,-80\n2,-80\n",
    "trace_descending.csv": TRACE_OK_HEAD + "1,-80\n3,-80\n2,-80\n",
    "trace_duplicate_freq.csv": TRACE_OK_HEAD + "1,-80\n1,-81\n",
    "trace_non_numeric.csv": TRACE_OK_HEAD + "1,-80\n2,abc\n",
    "trace_three_cells.csv": TRACE_OK_HEAD + "1,-80\n2,-80,7\n",
    "trace_one_cell.csv": TRACE_OK_HEAD + "1,-80\n2\n",
    "trace_one_row.csv": TRACE_OK_HEAD + "1,-80\n",
    "trace_empty.csv": "",
    "trace_negative_rbw.csv": "# rbw_hz=-30000\n# vbw_hz=300\nfreq_hz,power_dbm\n1,-80\n2,-80\n",
    "trace_zero_vbw.csv": "# rbw_hz=30000\n# vbw_hz=0\nfreq_hz,power_dbm\n1,-80\n2,-80\n",
    "trace_negative_freq.csv": TRACE_OK_HEAD + "-1,-80\n2,-80\n",
    "trace_nan_cell.csv": TRACE_OK_HEAD + "1,nan\n2,-80\n",
    "trace_trailing_garbage.csv": TRACE_OK_HEAD + "1,-80\n2,-80 dBm\n",
    "trace_metadata_after_header.csv": TRACE_OK_HEAD + "1,-80\n# label=late\n2,-80\n",
    "trace_duplicate_key.csv": "# rbw_hz=30000\n# rbw_hz=10000\n# vbw_hz=300\nfreq_hz,power_dbm\n1,-80\n2,-80\n",
    "trace_two_headers.csv": TRACE_OK_HEAD + "1,-80\nfreq_hz,power_dbm\n2,-80\n",
    "scan_single_power.csv": SCAN_OK_HEAD + "1e-4,3\n1e-4,3.1\n",
    "scan_negative_power.csv": SCAN_OK_HEAD + "-1e-4,3\n2e-4,4\n",
    "scan_negative_noise.csv": SCAN_OK_HEAD + "1e-4,-3\n2e-4,4\n",
    "scan_unknown_key.csv": "# label=x\n# rbw_hz=30000\noptical_power_w,noise_linear\n1e-4,3\n2e-4,4\n",
    "scan_wrong_header.csv": "# label=x\nfreq_hz,power_dbm\n1e-4,3\n2e-4,4\n",
    "scan_infinite.csv": SCAN_OK_HEAD + "1e-4,inf\n2e-4,4\n",
}


def malformed():
    MALFORMED.mkdir(parents=True, exist_ok=True)
    for old in MALFORMED.glob("*.csv"):
        old.unlink()
    for name, text in MALFORMED_FILES.items():
        (MALFORMED / name).write_text(text)


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(SEED)
    power_scans(rng)
    noise_spectra(rng)
    flat_traces()
    malformed()


if __name__ == "__main__":
    main()
