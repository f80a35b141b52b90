"""Riding the stable manifold from an initial capital composition.

Starting from stocks k0 = 5.5, h0 = 1 (so z0 = 5.5, well below the
balanced ratio z* of about 10.73) the script constructs the unique
trajectory that converges to the balanced path, then rebuilds the level
variables along it.
"""

import numpy as np

from cesgrowth import ModelParams, reconstruct_levels, saddle_path, steady_state

PARAMS = ModelParams(
    A1=1.05, A2=0.20, alpha1=0.6, alpha2=0.8, psi1=0.25, psi2=-0.10,
    delta_k=0.06, delta_h=0.05, eps=2.0, rho=0.06,
)

K0, H0 = 5.5, 1.0


def main():
    ss = steady_state(PARAMS)
    print(f"balanced ratio z* = {ss.z_star:.4f}, start z0 = {K0 / H0:.4f}")

    traj = saddle_path(PARAMS, z0=K0 / H0)
    traj = reconstruct_levels(traj, k0=K0, params=PARAMS)
    print(f"constructed {len(traj)} samples over {traj.times[-1]:.2f} time units "
          f"({traj.meta['stop_reason']})")
    print()

    print(f"{'t':>7} {'z':>8} {'q':>7} {'u':>7} {'v':>7} {'k':>8} {'h':>7}")
    picks = np.unique(np.linspace(0, len(traj) - 1, 12).astype(int))
    for i in picks:
        z, q, u, v = traj.states[i]
        k, h, _ = traj.levels[i]
        print(f"{traj.times[i]:>7.3f} {z:>8.4f} {q:>7.4f} {u:>7.4f} "
              f"{v:>7.4f} {k:>8.4f} {h:>7.4f}")
    print()

    x_star = np.array([ss.z_star, ss.q_star, ss.u_star, ss.v_star])
    dist = np.linalg.norm(traj.states[-1] - x_star)
    print(f"terminal distance to the fixed point: {dist:.2e}")
    print("Note the early samples: far from the balanced path the manifold")
    print("passes through allocations above one, where the reduced equations")
    print("remain smooth even though a one-sector reading breaks down.")


if __name__ == "__main__":
    main()
