#!/usr/bin/env python3
# Copyright 2026 The hpck Authors
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

"""Generate the tabulated refrigerant property files under data/.

Requires CoolProp (pip install CoolProp). Blends are reduced to pseudo-pure
fluids: the saturation temperature is the mid-glide value (mean of bubble and
dew temperature at the same pressure), liquid properties are taken at the
bubble point and vapor properties at the dew point.

All enthalpies/entropies are shifted so that saturated liquid at 0 C has
h = 200 kJ/kg and s = 1.0 kJ/(kg K).
"""

import argparse
import math
import os
import sys

import CoolProp
import CoolProp.CoolProp as CP

K = 273.15

# id -> (CoolProp fluid, is_blend, critical pressure [MPa], critical temperature [C])
# Critical values are the published metadata; the tables reach Tc - 5 K.
FLUIDS = {
    "R134a": ("R134a", False, 4.06, 101.1),
    "R152a": ("R152A", False, 4.50, 113.15),
    "R450A": ("R450A.mix", True, 4.01, 75.1),
    "R513A": ("R513A.mix", True, 3.77, 96.5),
    "R1234yf": ("R1234yf", False, 3.38, 94.7),
    "R1234ze(E)": ("R1234ze(E)", False, 3.64, 109.4),
}

SAT_T_MIN = -60
SH_T_MIN = -40
SH_T_STEP = 2
SH_OFFSETS = list(range(0, 81))


def bisect(fun, lo, hi, tol=1e-9, it=200):
    flo = fun(lo)
    fhi = fun(hi)
    if flo * fhi > 0:
        raise RuntimeError("root not bracketed")
    for _ in range(it):
        mid = 0.5 * (lo + hi)
        fm = fun(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < tol * max(1.0, abs(mid)):
            break
    return 0.5 * (lo + hi)


def props_t(out, tt, b, bv, name, blend):
    """PropsSI with temperature as the first input.

    The HEOS mixture flashes fail at isolated temperatures; for blends those
    points are interpolated linearly between the nearest converged
    temperatures on either side.
    """
    try:
        return CP.PropsSI(out, "T", tt, b, bv, name)
    except ValueError:
        if not blend:
            raise
    steps = (0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.4, 0.8, 1.2)

    def nearest(sign):
        for d in steps:
            try:
                return d, CP.PropsSI(out, "T", tt + sign * d, b, bv, name)
            except ValueError:
                continue
        raise ValueError(f"{name}: no flash near T={tt} K")

    dl, lo = nearest(-1.0)
    du, hi = nearest(1.0)
    return lo + (hi - lo) * dl / (dl + du)


class SatTrack:
    """Bubble (q=0) or dew (q=1) line of a mixture, followed by continuation.

    Each flash is seeded with the phase compositions and densities of the last
    converged point, which keeps the mixture solver working up to a few K
    below the critical point.
    """

    MAX_STEP = 0.1

    def __init__(self, name, q, t_start):
        self.q = q
        self.st = CP.AbstractState("HEOS", name)
        self.st.update(CP.QT_INPUTS, q, t_start)
        self.t = t_start
        self.snap = self._snapshot()

    def _snapshot(self):
        st = self.st
        return (
            self.t,
            st.p(),
            st.saturated_liquid_keyed_output(CP.iDmolar),
            st.saturated_vapor_keyed_output(CP.iDmolar),
            list(st.mole_fractions_liquid()),
            list(st.mole_fractions_vapor()),
        )

    def _step(self, tt):
        t0, p, rl, rv, x, y = self.snap
        g = CP.PyGuessesStructure()
        g.T = tt
        g.p = p
        g.rhomolar_liq = rl
        g.rhomolar_vap = rv
        g.x = x
        g.y = y
        self.st.update_with_guesses(CP.QT_INPUTS, self.q, tt, g)
        self.t = tt
        self.snap = self._snapshot()

    def at(self, tt):
        """Move to tt [K] and return (P [Pa], h [J/kg], s [J/kg/K], rho [kg/m3])."""
        if tt != self.t:
            n = max(1, int(math.ceil(abs(tt - self.t) / self.MAX_STEP)))
            t0 = self.t
            for i in range(1, n + 1):
                self._step(t0 + (tt - t0) * i / n)
        st = self.st
        return st.p(), st.hmass(), st.smass(), st.rhomass()


class Fluid:
    def __init__(self, name, blend):
        self.name = name
        self.blend = blend
        self.half_glide = {}
        if blend:
            t0 = SAT_T_MIN + K
            self.bubble = SatTrack(name, 0, t0)
            self.dew = SatTrack(name, 1, t0)

    def psat(self, t):
        """Pressure [Pa] at which the (mid-glide) saturation temperature is t [C]."""
        if not self.blend:
            return CP.PropsSI("P", "T", t + K, "Q", 0, self.name)
        # half-glide d such that bubble(t - d) and dew(t + d) share one pressure
        pb = lambda tt: self.bubble.at(tt + K)[0]
        pd = lambda tt: self.dew.at(tt + K)[0]
        f = lambda d: pb(t - d) - pd(t + d)
        hi = 0.05
        while f(hi) > 0:
            hi *= 2.0
        d = bisect(f, 0.0, hi, tol=1e-12)
        self.half_glide[t] = d
        return 0.5 * (pb(t - d) + pd(t + d))

    def sat(self, t, q):
        """Saturated liquid (q=0) or vapor (q=1) at mid-glide temperature t [C]."""
        tt = t + K
        if self.blend:
            d = self.half_glide[t]
            _, h, s, rho = (self.dew.at(tt + d) if q == 1 else self.bubble.at(tt - d))
            return h / 1e3, s / 1e3, rho
        h = props_t("H", tt, "Q", q, self.name, self.blend) / 1e3
        s = props_t("S", tt, "Q", q, self.name, self.blend) / 1e3
        d = props_t("D", tt, "Q", q, self.name, self.blend)
        return h, s, d

    def dew_t(self, t):
        return t + self.half_glide.get(t, 0.0)

    def pt(self, p, t):
        h = props_t("H", t + K, "P", p, self.name, self.blend) / 1e3
        s = props_t("S", t + K, "P", p, self.name, self.blend) / 1e3
        d = props_t("D", t + K, "P", p, self.name, self.blend)
        return h, s, d


def fmt(x, nd):
    return f"{x:.{nd}f}"


def generate(fid, outdir):
    cp_name, blend, pc_meta, tc_meta = FLUIDS[fid]
    fl = Fluid(cp_name, blend)
    t_max = int(math.ceil(tc_meta - 5.0))

    fl.psat(0.0)
    hf0, sf0, _ = fl.sat(0.0, 0)
    dh = 200.0 - hf0
    ds = 1.0 - sf0

    sat_rows = {}
    for t in range(SAT_T_MIN, t_max + 1):
        p = fl.psat(float(t))
        hf, sf, rf = fl.sat(t, 0)
        hg, sg, rg = fl.sat(t, 1)
        row = (
            str(t),
            fmt(p / 1e3, 6),
            fmt(hf + dh, 6),
            fmt(hg + dh, 6),
            fmt(sf + ds, 8),
            fmt(sg + ds, 8),
            fmt(rf, 6),
            fmt(rg, 6),
        )
        sat_rows[t] = (p, row)

    with open(os.path.join(outdir, f"{fid}.sat.csv"), "w", newline="\n") as f:
        f.write("T_C,P_kPa,hf_kJkg,hg_kJkg,sf_kJkgK,sg_kJkgK,rhof_kgm3,rhog_kgm3\n")
        for t in sorted(sat_rows):
            f.write(",".join(sat_rows[t][1]) + "\n")

    p_cap = 0.9 * pc_meta * 1e6
    with open(os.path.join(outdir, f"{fid}.sh.csv"), "w", newline="\n") as f:
        f.write("P_kPa,T_C,h_kJkg,s_kJkgK,rho_kgm3\n")
        for t in range(SH_T_MIN, t_max + 1, SH_T_STEP):
            p, srow = sat_rows[t]
            if p > p_cap:
                break
            p_str = srow[1]
            t_dew = fl.dew_t(t)
            for off in SH_OFFSETS:
                tt = t + off
                if off == 0:
                    # identical text to the saturated-vapor columns
                    vals = (srow[3], srow[5], srow[7])
                else:
                    if tt <= t_dew:
                        raise RuntimeError(f"{fid}: offset {off} K inside glide at {p} Pa")
                    h, s, d = fl.pt(p, float(tt))
                    vals = (fmt(h + dh, 6), fmt(s + ds, 8), fmt(d, 6))
                f.write(",".join((p_str, str(tt)) + vals) + "\n")
    return t_max


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("fluids", nargs="*", default=list(FLUIDS))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for fid in args.fluids:
        t_max = generate(fid, args.out)
        print(f"{fid}: saturation {SAT_T_MIN}..{t_max} C", file=sys.stderr)
    with open(os.path.join(args.out, "SOURCE.txt"), "w", newline="\n") as f:
        f.write(f"Generated by tools/gen_property_tables.py with CoolProp {CoolProp.__version__}\n")
        f.write("Reference state: saturated liquid at 0 C, h = 200 kJ/kg, s = 1.0 kJ/(kg K)\n")
        f.write("Blends (R450A, R513A): pseudo-pure, mid-glide saturation temperature\n")


if __name__ == "__main__":
    main()
