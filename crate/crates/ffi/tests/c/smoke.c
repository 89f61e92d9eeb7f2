#include <math.h>
#include <stdio.h>
#include "matterwave.h"

#define CHECK(cond)                                                      \
  do {                                                                   \
    if (!(cond)) {                                                       \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,     \
              mw_last_error());                                          \
      return 1;                                                          \
    }                                                                    \
  } while (0)

int main(int argc, char **argv) {
  double k = 0.0;
  CHECK(mw_ellip_k(0.5, &k) == MW_STATUS_OK);
  CHECK(fabs(k - 1.8540746773013719) < 1e-14);
  CHECK(mw_ellip_k(2.0, &k) == MW_STATUS_INVALID_ARGUMENT);
  CHECK(mw_last_error()[0] != '\0');

  MwBoxParams params = mw_box_params_default();
  MwGpMode *mode = NULL;
  CHECK(mw_gp_mode_new(5.0, 1.0, 1, &params, &mode) == MW_STATUS_OK);
  MwGpModeInfo info;
  CHECK(mw_gp_mode_info(mode, &info) == MW_STATUS_OK);
  CHECK(info.branch == MW_BRANCH_REPULSIVE && info.m_param > 0.0);
  double residual = 1.0;
  CHECK(mw_gp_mode_residual(mode, &residual) == MW_STATUS_OK && residual < 1e-8);
  mw_gp_mode_free(mode);

  MwOscillator osc = {1.0, 3.0, 0.01, 2.0};
  double q_star = 0.0;
  CHECK(mw_equilibrium(&osc, &q_star) == MW_STATUS_OK);
  CHECK(fabs(q_star - 3.1960962061671768) < 1e-10);

  MwWallState init = {0.0, 3.1, 0.0};
  MwTrajectory *traj = NULL;
  CHECK(mw_integrate(&osc, init, 10.0, NULL, &traj) == MW_STATUS_OK);
  const MwWallState *samples = NULL;
  size_t n = 0;
  CHECK(mw_trajectory_samples(traj, &samples, &n) == MW_STATUS_OK);
  CHECK(n == 1001 && samples[n - 1].t == 10.0);
  mw_trajectory_free(traj);

  if (argc > 1) {
    MwRunSummary summary;
    CHECK(mw_run_preset("fig1", argv[1], &summary) == MW_STATUS_OK);
    CHECK(summary.midpoint > 1.0 && isnan(summary.c) == 0);
    CHECK(mw_run_preset("nope", argv[1], &summary) == MW_STATUS_CONFIG);
  }
  puts("ok");
  return 0;
}
