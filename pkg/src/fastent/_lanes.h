/* Lane-interleaved evaluation of Q(f) = sum_v R(v, f) / v.
 *
 * Each lane performs exactly the scalar operation sequence of the reference
 * loop for its own f. Divisions are taken as multiplications by 1/(t - v)
 * and 1/v; those reciprocals depend only on v, so one pair serves every
 * lane. Must be compiled without -ffast-math and with
 * -ffp-contract=off to stay bit-identical to the pure-Python backend.
 */
#ifndef FASTENT_LANES_H
#define FASTENT_LANES_H

#include <string.h>

#define FASTENT_LANES 16
#define FASTENT_CHECK_EVERY 256
/* 2**54: term * 2**54 < q implies q + term == q */
#define FASTENT_FREEZE 18014398509481984.0

static void fastent_finish(long long f, long long t, long long v0, double *r_io,
                           double *q_io, int exact, long long *executed,
                           long long *elided)
{
    double r = *r_io, q = *q_io, term;
    const double c = (double)(1 - f);
    const long long n = t - f;
    long long v;
    for (v = v0; v <= n; v++) {
        r *= 1.0 + c * (1.0 / (double)(t - v));
        term = r * (1.0 / (double)v);
        if (exact && term * FASTENT_FREEZE < q) {
            *executed += v - v0;
            *elided += n - v + 1;
            *r_io = r;
            *q_io = q;
            return;
        }
        q += term;
    }
    if (n >= v0)
        *executed += n - v0 + 1;
    *r_io = r;
    *q_io = q;
}

/* Plain lane loop over v in [v0, v1), free of early-exit control flow.
 * GCC and Clang get explicit two-wide vectors (element-wise IEEE operations,
 * so results match the scalar loop); other compilers get the scalar form. */
#if defined(__GNUC__)
typedef double fastent_v2 __attribute__((vector_size(16)));
#define FASTENT_PAIRS (FASTENT_LANES / 2)

static inline void fastent_lanes_run(double *restrict r_io, double *restrict q_io,
                                     const double *restrict c_in, long long t,
                                     long long v0, long long v1)
{
    fastent_v2 R[FASTENT_PAIRS], Q[FASTENT_PAIRS], C[FASTENT_PAIRS];
    const fastent_v2 one = {1.0, 1.0};
    long long v;
    int j;
    memcpy(R, r_io, sizeof R);
    memcpy(Q, q_io, sizeof Q);
    memcpy(C, c_in, sizeof C);
    for (v = v0; v < v1; v++) {
        const double itv = 1.0 / (double)(t - v), iv = 1.0 / (double)v;
        const fastent_v2 ITV = {itv, itv}, IV = {iv, iv};
        for (j = 0; j < FASTENT_PAIRS; j++) {
            R[j] *= one + C[j] * ITV;
            Q[j] += R[j] * IV;
        }
    }
    memcpy(r_io, R, sizeof R);
    memcpy(q_io, Q, sizeof Q);
}
#else
static void fastent_lanes_run(double *r_io, double *q_io, const double *c_in,
                              long long t, long long v0, long long v1)
{
    long long v;
    int k;
    for (v = v0; v < v1; v++) {
        const double itv = 1.0 / (double)(t - v), iv = 1.0 / (double)v;
        for (k = 0; k < FASTENT_LANES; k++) {
            r_io[k] *= 1.0 + c_in[k] * itv;
            q_io[k] += r_io[k] * iv;
        }
    }
}
#endif

static void fastent_q_block(const long long *fs, long long m, long long t, int exact,
                            double *out, long long *executed, long long *elided)
{
    double R[FASTENT_LANES], Q[FASTENT_LANES], C[FASTENT_LANES];
    long long F[FASTENT_LANES];
    long long n_min = t, v = 1, stop;
    int k, frozen = 0;

    for (k = 0; k < FASTENT_LANES; k++) {
        /* padding lanes repeat the first frequency; results are dropped */
        F[k] = k < m ? fs[k] : fs[0];
        if (t - F[k] < n_min)
            n_min = t - F[k];
        C[k] = (double)(1 - F[k]);
        R[k] = 1.0;
        Q[k] = 0.0;
    }

    while (v <= n_min && !frozen) {
        stop = v + FASTENT_CHECK_EVERY;
        if (stop > n_min + 1)
            stop = n_min + 1;
        fastent_lanes_run(R, Q, C, t, v, stop);
        v = stop;
        if (exact)
            /* recomputes the last term added, bit for bit */
            for (k = 0; k < FASTENT_LANES; k++)
                frozen |= (R[k] * (1.0 / (double)(v - 1))) * FASTENT_FREEZE < Q[k];
    }
    *executed += m * (v - 1);

    for (k = 0; k < m; k++) {
        fastent_finish(F[k], t, v, &R[k], &Q[k], exact, executed, elided);
        out[k] = Q[k];
    }
}

#endif
