# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling loop for restart walks; mirrors _walk_core_py exactly.

Same SplitMix64 streams, same one-draw-per-step discipline, same
double-precision thresholds: a fixed seed gives counts identical to the
pure-Python kernel.  Results are tallied in a flat array indexed by the
Lehmer rank of the final permutation, which caps the supported degree.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc

cdef uint64_t _GOLDEN = 0x9E3779B97F4A7C15ULL
cdef uint64_t _MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t _MIX2 = 0x94D049BB133111EBULL
cdef double _U53 = 1.0 / 9007199254740992.0  # 2^-53

MAX_DEGREE = 10  # counts array holds degree! slots


cdef inline double _next_u01(uint64_t *state) nogil:
    cdef uint64_t z
    state[0] = state[0] + _GOLDEN
    z = state[0]
    z = (z ^ (z >> 30)) * _MIX1
    z = (z ^ (z >> 27)) * _MIX2
    z = z ^ (z >> 31)
    return <double> (z >> 11) * _U53


def run_samples(int n, ks, asc, d1, d2, seed, long long samples, long long max_restarts):
    """Sample the restart walk; returns {one-line tuple: hit count}.

    Contract matches _walk_core_py.run_samples.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"compiled kernel supports degree 1..{MAX_DEGREE}, got {n}")
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    cdef int nsteps = len(ks)
    cdef uint64_t useed = <uint64_t> (int(seed) & ((1 << 64) - 1))

    cdef int64_t fact[11]
    cdef int t
    fact[0] = 1
    for t in range(1, 11):
        fact[t] = fact[t - 1] * t
    cdef int64_t total = fact[n]

    cdef int *cks = <int *> malloc(nsteps * sizeof(int))
    cdef double *casc = <double *> malloc(nsteps * sizeof(double))
    cdef double *cd1 = <double *> malloc(nsteps * sizeof(double))
    cdef double *cd2 = <double *> malloc(nsteps * sizeof(double))
    cdef int64_t *cnt = <int64_t *> calloc(total, sizeof(int64_t))
    if cks == NULL or casc == NULL or cd1 == NULL or cd2 == NULL or cnt == NULL:
        free(cks); free(casc); free(cd1); free(cd2); free(cnt)
        raise MemoryError()
    cdef int j
    for j in range(nsteps):
        k = ks[j]
        if not 0 <= k <= n - 2:
            free(cks); free(casc); free(cd1); free(cd2); free(cnt)
            raise ValueError(f"step position {k} out of range for degree {n}")
        cks[j] = k
        casc[j] = asc[j]
        cd1[j] = d1[j]
        cd2[j] = d2[j]

    cdef int perm[16]
    cdef uint64_t state
    cdef long long i, restarts
    cdef long long failed_sample = -1
    cdef int pos, k2, a, b, c, m
    cdef double u
    cdef int64_t rank

    with nogil:
        for i in range(samples):
            state = useed + (<uint64_t> (i + 1)) * _GOLDEN
            state = (state ^ (state >> 30)) * _MIX1
            state = (state ^ (state >> 27)) * _MIX2
            state = state ^ (state >> 31)
            for m in range(n):
                perm[m] = m + 1
            restarts = 0
            pos = 0
            while pos < nsteps:
                u = _next_u01(&state)
                k2 = cks[pos]
                a = perm[k2]
                b = perm[k2 + 1]
                if a < b:
                    if u < casc[pos]:
                        perm[k2] = b
                        perm[k2 + 1] = a
                    pos += 1
                elif u < cd1[pos]:
                    perm[k2] = b
                    perm[k2 + 1] = a
                    pos += 1
                elif u < cd2[pos]:
                    pos += 1
                else:
                    restarts += 1
                    if restarts > max_restarts:
                        failed_sample = i
                        break
                    for m in range(n):
                        perm[m] = m + 1
                    pos = 0
            if failed_sample >= 0:
                break
            # Lehmer rank of the final permutation
            rank = 0
            for m in range(n - 1):
                c = 0
                for pos in range(m + 1, n):
                    if perm[pos] < perm[m]:
                        c += 1
                rank += c * fact[n - 1 - m]
            cnt[rank] += 1

    if failed_sample >= 0:
        free(cks); free(casc); free(cd1); free(cd2); free(cnt)
        raise RuntimeError(
            f"sample {failed_sample} exceeded {max_restarts} restarts; "
            "q is too small for practical simulation")

    # collect nonzero ranks (compiled scan, rare appends)
    pairs = []
    cdef int64_t idx
    for idx in range(total):
        if cnt[idx] != 0:
            pairs.append((idx, cnt[idx]))
    free(cks); free(casc); free(cd1); free(cd2); free(cnt)

    # unrank: factorial-base digits select from the remaining values
    counts = {}
    pyfact = [1] * (n + 1)
    for t in range(1, n + 1):
        pyfact[t] = pyfact[t - 1] * t
    for rank_py, hits in pairs:
        avail = list(range(1, n + 1))
        word = []
        rest = rank_py
        for ppos in range(n):
            digit, rest = divmod(rest, pyfact[n - 1 - ppos])
            word.append(avail.pop(digit))
        counts[tuple(word)] = hits
    return counts
