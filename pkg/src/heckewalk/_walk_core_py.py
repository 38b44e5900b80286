"""Pure-Python sampling loop: reference implementation of the compiled
kernel's contract.

Both kernels draw from identical SplitMix64 streams (one stream per sample,
seeded by finalizing seed + (index+1)*GOLDEN), consume exactly one uniform
variate per step, and compare against the same precomputed double-precision
thresholds -- so for a fixed seed they produce bitwise-identical sample
paths and equal count maps, and merging per-sample results is independent
of execution order.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
_U53 = 2.0 ** -53


def stream_state(seed: int, index: int) -> int:
    """Initial SplitMix64 state for one sample's private stream."""
    z = (seed + (index + 1) * GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def run_samples(n, ks, asc, d1, d2, seed, samples, max_restarts):
    """Sample the restart walk; returns {one-line tuple: hit count}.

    ks holds 0-based left positions; asc / d1 / d2 are per-step cumulative
    thresholds (ascent swap; descent swap; descent swap-or-stay).  A sample
    restarts from the identity whenever its uniform draw lands past d2 on a
    descent, and aborts the whole run past max_restarts restarts.
    """
    seed &= MASK64
    nsteps = len(ks)
    counts: dict[tuple[int, ...], int] = {}
    for i in range(samples):
        state = stream_state(seed, i)
        perm = list(range(1, n + 1))
        restarts = 0
        pos = 0
        while pos < nsteps:
            state = (state + GOLDEN) & MASK64
            z = state
            z = ((z ^ (z >> 30)) * MIX1) & MASK64
            z = ((z ^ (z >> 27)) * MIX2) & MASK64
            z ^= z >> 31
            u = (z >> 11) * _U53
            k = ks[pos]
            a = perm[k]
            b = perm[k + 1]
            if a < b:
                if u < asc[pos]:
                    perm[k] = b
                    perm[k + 1] = a
                pos += 1
            elif u < d1[pos]:
                perm[k] = b
                perm[k + 1] = a
                pos += 1
            elif u < d2[pos]:
                pos += 1
            else:
                restarts += 1
                if restarts > max_restarts:
                    raise RuntimeError(
                        f"sample {i} exceeded {max_restarts} restarts; "
                        "q is too small for practical simulation")
                perm = list(range(1, n + 1))
                pos = 0
        key = tuple(perm)
        counts[key] = counts.get(key, 0) + 1
    return counts
