#ifndef MATTERWAVE_H
#define MATTERWAVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MwStatus {
  MW_STATUS_OK = 0,
  MW_STATUS_NULL_POINTER = 1,
  // Argument outside the domain of the call, or malformed input.
  MW_STATUS_INVALID_ARGUMENT = 2,
  MW_STATUS_NON_CONVERGENCE = 3,
  // The wall reached the guard length.
  MW_STATUS_SINGULARITY = 4,
  MW_STATUS_STEP_UNDERFLOW = 5,
  MW_STATUS_NO_STABLE_ROOT = 6,
  MW_STATUS_ENERGY_BELOW_MINIMUM = 7,
  MW_STATUS_EVENT_ACCUMULATION = 8,
  // Scenario configuration rejected.
  MW_STATUS_CONFIG = 9,
  MW_STATUS_IO = 10,
  // A Rust panic was caught at the boundary.
  MW_STATUS_PANIC = 11,
} MwStatus;

typedef enum MwPowerKind {
  MW_POWER_KIND_SN2 = 0,
  MW_POWER_KIND_SN4 = 1,
  MW_POWER_KIND_CN2 = 2,
  MW_POWER_KIND_CN4 = 3,
} MwPowerKind;

typedef enum MwBranch {
  MW_BRANCH_REPULSIVE = 0,
  MW_BRANCH_ATTRACTIVE = 1,
} MwBranch;

// Sampled billiard run.
typedef struct MwBilliardRun MwBilliardRun;

// Stationary condensate mode.
typedef struct MwGpMode MwGpMode;

// Sampled wall trajectory.
typedef struct MwTrajectory MwTrajectory;

typedef struct MwBoxParams {
  double m_atom;
  double m_wall;
  double hbar;
} MwBoxParams;

typedef struct MwJacobi {
  double sn;
  double cn;
  double dn;
} MwJacobi;

typedef struct MwForceCoefficients {
  double c;
  double d;
} MwForceCoefficients;

typedef struct MwGpModeInfo {
  enum MwBranch branch;
  uint32_t j;
  double m_param;
  double a;
  double b;
  double delta;
  double g;
  double q;
  // Chemical potential.
  double u;
  // Kinetic prefactor `hbar² / (2 m_atom)`.
  double kappa;
} MwGpModeInfo;

typedef struct MwIntegratorOptions {
  double tol;
  double sample_dt;
  double q_guard;
  uint64_t max_steps;
} MwIntegratorOptions;

// Wall equation `Q'' = c/Q³ + d/Q² − omega²(Q − q0)`.
typedef struct MwOscillator {
  double omega;
  double q0;
  double c;
  double d;
} MwOscillator;

typedef struct MwWallState {
  double t;
  double q;
  double qdot;
} MwWallState;

typedef struct MwTrajectoryStats {
  double q_min;
  double q_max;
  double midpoint;
  double time_mean_q;
  double energy_drift;
  uint64_t steps_accepted;
  uint64_t steps_rejected;
} MwTrajectoryStats;

typedef struct MwBilliardParams {
  double m_atom;
  double m_wall;
  double omega;
  double q0;
} MwBilliardParams;

typedef struct MwBilliardState {
  double t;
  // Atom position and velocity.
  double q;
  double v;
  double wall_q;
  double wall_v;
} MwBilliardState;

typedef struct MwBilliardStats {
  uint64_t impacts;
  uint64_t reflections;
  double wall_q_min;
  double wall_q_max;
  double wall_midpoint;
  double wall_time_mean;
  double energy_drift;
} MwBilliardStats;

// Headline numbers of a scenario run. Fields that do not apply to the
// system kind are NaN (or 0 for counts).
typedef struct MwRunSummary {
  double c;
  double d;
  double q_min;
  double q_max;
  double midpoint;
  double time_mean;
  double equilibrium;
  double energy_drift;
  uint64_t samples;
  uint64_t impacts;
  uint64_t reflections;
} MwRunSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next failing call on the same thread.
const char *mw_last_error(void);

// `m_atom = m_wall = hbar = 1`.
struct MwBoxParams mw_box_params_default(void);

// # Safety
// `out` must be null or valid for writes.
enum MwStatus mw_ellip_k(double m, double *out);

// # Safety
// `out` must be null or valid for writes.
enum MwStatus mw_ellip_e(double m, double *out);

// # Safety
// `out` must be null or valid for writes.
enum MwStatus mw_jacobi_sn_cn_dn(double z, double m, struct MwJacobi *out);

// Quarter-period integral of `sn²`, `sn⁴`, `cn²` or `cn⁴` for `0 < m < 1`.
//
// # Safety
// `out` must be null or valid for writes.
enum MwStatus mw_power_integral(enum MwPowerKind kind, double m, double *out);

// Drive coefficient of an atom with level `levels[i]` occupied with
// probability `probs[i]`; the probabilities must sum to one.
//
// # Safety
// `levels` and `probs` must point to `n` readable elements; `params` and
// `out` must be null or valid.
enum MwStatus mw_atom_coefficient(const uint32_t *levels,
                                  const double *probs,
                                  size_t n,
                                  const struct MwBoxParams *params,
                                  struct MwForceCoefficients *out);

// Solves mode `j` for coupling `g` in a box of length `q`.
//
// # Safety
// `params` must be null or valid; `out` must be null or valid for writes.
// The handle written to `out` must be released with [`mw_gp_mode_free`].
enum MwStatus mw_gp_mode_new(double g,
                             double q,
                             uint32_t j,
                             const struct MwBoxParams *params,
                             struct MwGpMode **out);

// # Safety
// `mode` must be null or a handle from [`mw_gp_mode_new`] not yet freed.
void mw_gp_mode_free(struct MwGpMode *mode);

// # Safety
// `mode` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_gp_mode_info(const struct MwGpMode *mode, struct MwGpModeInfo *out);

// Wavefunction at `x` in `[0, Q]`.
//
// # Safety
// `mode` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_gp_mode_psi(const struct MwGpMode *mode, double x, double *out);

// Scaled residual of the stationary equation on the interior grid.
//
// # Safety
// `mode` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_gp_mode_residual(const struct MwGpMode *mode, double *out);

// # Safety
// `mode` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_gp_mode_force_coefficients(const struct MwGpMode *mode,
                                            double m_wall,
                                            struct MwForceCoefficients *out);

struct MwIntegratorOptions mw_integrator_options_default(void);

// Stable equilibrium of the wall.
//
// # Safety
// `osc` must be null or valid; `out` must be null or valid for writes.
enum MwStatus mw_equilibrium(const struct MwOscillator *osc, double *out);

// Turning points of the well containing the equilibrium at `energy`.
//
// # Safety
// `osc` must be null or valid; `lo` and `hi` must be null or valid for
// writes.
enum MwStatus mw_turning_points(const struct MwOscillator *osc,
                                double energy,
                                double *lo,
                                double *hi);

// Integrates the wall from `init` to `t_end`. `opts` may be null for the
// defaults.
//
// # Safety
// `osc` must be null or valid, `opts` null or valid, `out` null or valid
// for writes. Release the handle with [`mw_trajectory_free`].
enum MwStatus mw_integrate(const struct MwOscillator *osc,
                           struct MwWallState init,
                           double t_end,
                           const struct MwIntegratorOptions *opts,
                           struct MwTrajectory **out);

// Borrows the samples; `*data` stays valid until the handle is freed.
//
// # Safety
// `traj` must be a live handle; `data` and `len` must be null or valid for
// writes.
enum MwStatus mw_trajectory_samples(const struct MwTrajectory *traj,
                                    const struct MwWallState **data,
                                    size_t *len);

// # Safety
// `traj` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_trajectory_stats(const struct MwTrajectory *traj, struct MwTrajectoryStats *out);

// # Safety
// `traj` must be null or a handle from [`mw_integrate`] not yet freed.
void mw_trajectory_free(struct MwTrajectory *traj);

// Event-driven run of the classical billiard, sampled every `sample_dt`.
//
// # Safety
// `params` must be null or valid; `out` must be null or valid for writes.
// Release the handle with [`mw_billiard_run_free`].
enum MwStatus mw_billiard_simulate(const struct MwBilliardParams *params,
                                   struct MwBilliardState init,
                                   double t_end,
                                   double sample_dt,
                                   struct MwBilliardRun **out);

// Borrows the samples; `*data` stays valid until the handle is freed.
//
// # Safety
// `run` must be a live handle; `data` and `len` must be null or valid for
// writes.
enum MwStatus mw_billiard_run_samples(const struct MwBilliardRun *run,
                                      const struct MwBilliardState **data,
                                      size_t *len);

// # Safety
// `run` must be a live handle; `out` must be null or valid for writes.
enum MwStatus mw_billiard_run_stats(const struct MwBilliardRun *run, struct MwBilliardStats *out);

// # Safety
// `run` must be null or a handle from [`mw_billiard_simulate`] not yet
// freed.
void mw_billiard_run_free(struct MwBilliardRun *run);

// Runs a scenario given as INI text, writing its CSV and summary files.
// `out_dir` overrides the configured output directory unless null.
//
// # Safety
// `ini` must be a NUL-terminated string, `out_dir` null or NUL-terminated,
// `out` null or valid for writes.
enum MwStatus mw_run_config(const char *ini, const char *out_dir, struct MwRunSummary *out);

// Runs a built-in preset. `out_dir` overrides the default `.` unless
// null.
//
// # Safety
// `name` must be a NUL-terminated string, `out_dir` null or NUL-terminated,
// `out` null or valid for writes.
enum MwStatus mw_run_preset(const char *name, const char *out_dir, struct MwRunSummary *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATTERWAVE_H */
