"""Numerical geometry of nilpotent orbits: conical flow, homogeneity of the
KKS form and volume growth of the sl(2,R) cone.

    python3 scripts/geometry_checks.py --seed 1
"""

import argparse

from nilorbits.core import AlgebraDescriptor, is_zero_datum
from nilorbits.gibbs import OrbitChart, check_conical_flow, homogeneity_report, truncated_cone_volume
from nilorbits.matrixlab import build_model
from nilorbits.orbits import enumerate_orbit_data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for alg in (AlgebraDescriptor.sl_r(3), AlgebraDescriptor.so_r(2, 2), AlgebraDescriptor.sp_r(2),
                AlgebraDescriptor.su(2, 1)):
        for d in enumerate_orbit_data(alg):
            if is_zero_datum(d):
                continue
            t = build_model(alg, d)
            chart = OrbitChart.from_triple(t)
            rep = homogeneity_report(chart, 2.0, seed=args.seed)
            print(f"{alg.label():<9} dim {chart.dim:>2}  flow {check_conical_flow(t, 1.0):.1e}  "
                  f"lambda(2x)/lambda(x) = {rep.liouville_ratio:.6g} (2^d = {2 ** (chart.dim // 2)})")
    print("sl(2,R) cone volume {|y| <= R}:")
    v1 = truncated_cone_volume(1.0)
    for R in (1, 2, 4, 8, 16):
        v = truncated_cone_volume(R)
        print(f"    R={R:<3} vol={v:10.5f}  vol/vol(1)={v / v1:.6f}")


if __name__ == "__main__":
    main()
