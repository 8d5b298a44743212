// Copyright 2026 The mrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the mrsim mixed-reality fleet simulator.
 *
 * All objects are opaque handles released with their *_free function.
 * Every fallible call returns an mrsim_status; on failure the message is
 * available from mrsim_last_error() on the same thread until the next call. */

#ifndef MRSIM_MRSIM_H_
#define MRSIM_MRSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MRSIM_API __declspec(dllexport)
#else
#define MRSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mrsim_status {
  MRSIM_OK = 0,
  MRSIM_ERR_INVALID_ARGUMENT = 1,
  MRSIM_ERR_UNKNOWN_FRAME = 2,
  MRSIM_ERR_EXTRAPOLATION = 3,
  MRSIM_ERR_DEGENERATE_INPUT = 4,
  MRSIM_ERR_MALFORMED_IMAGE = 5,
  MRSIM_ERR_MISSING_METADATA = 6,
  MRSIM_ERR_NON_POSITIVE_RESOLUTION = 7,
  MRSIM_ERR_INVALID_GEOMETRY = 8,
  MRSIM_ERR_POSE_OUTSIDE_MAP = 9,
  MRSIM_ERR_PARAM_MISMATCH = 10,
  MRSIM_ERR_ALL_WEIGHTS_ZERO = 11,
  MRSIM_ERR_OUTSIDE_IM_AREA = 12,
  MRSIM_ERR_EMPTY_QUEUE = 13,
  MRSIM_ERR_UNKNOWN_ROBOT = 14,
  MRSIM_ERR_MALFORMED_JSON = 15,
  MRSIM_ERR_SCHEMA_VIOLATION = 16,
  MRSIM_ERR_UNKNOWN_OP = 17,
  MRSIM_ERR_CONFIG_INVALID = 18,
  MRSIM_ERR_EMULATOR_SPAWN_FAILURE = 19,
  MRSIM_ERR_BRIDGE_UNREACHABLE = 20,
  MRSIM_ERR_MAP_LOAD = 21,
  MRSIM_ERR_IO = 22,
  MRSIM_ERR_INTERNAL = 23
} mrsim_status;

MRSIM_API const char* mrsim_version(void);
MRSIM_API const char* mrsim_status_string(mrsim_status status);
MRSIM_API const char* mrsim_last_error(void);

typedef struct mrsim_pose2d {
  double x;
  double y;
  double theta;
} mrsim_pose2d;

/* ---- geometry and kinematics ---------------------------------------- */

typedef struct mrsim_alignment {
  double rotation;
  double tx;
  double ty;
  double scale;
} mrsim_alignment;

MRSIM_API mrsim_status mrsim_project_to_virtual(const mrsim_pose2d* physical, const mrsim_alignment* align,
                                                mrsim_pose2d* out);
MRSIM_API mrsim_status mrsim_project_to_physical(const mrsim_pose2d* virtual_pose,
                                                 const mrsim_alignment* align, mrsim_pose2d* out);

/* Sets *found to 0 when the arc never passes within capture_radius of the
 * point inside the horizon. */
MRSIM_API mrsim_status mrsim_time_to_intersection(const mrsim_pose2d* pose, double v, double omega,
                                                  double point_x, double point_y, double capture_radius,
                                                  double horizon, int* found, double* tti);

/* ---- bridge server --------------------------------------------------- */

typedef struct mrsim_bridge mrsim_bridge;

/* port 0 picks a free port. */
MRSIM_API mrsim_status mrsim_bridge_start(const char* host, int port, mrsim_bridge** out);
MRSIM_API int mrsim_bridge_port(const mrsim_bridge* bridge);
MRSIM_API void mrsim_bridge_free(mrsim_bridge* bridge);

/* ---- physical-robot emulator ----------------------------------------- */

typedef struct mrsim_emulator_options {
  const char* bridge_url;
  const char* map_pgm;
  const char* map_meta;
  int id;
  mrsim_pose2d start;
  uint64_t seed;
  const char* noise_profile; /* optional */
  const char* truth_log;     /* optional */
  int connect_attempts;
  double tick_rate;
  int scan_every;
} mrsim_emulator_options;

MRSIM_API void mrsim_emulator_options_init(mrsim_emulator_options* options);
/* Blocks until the bridge closes the connection. */
MRSIM_API mrsim_status mrsim_emulator_run(const mrsim_emulator_options* options);

/* ---- scenarios ------------------------------------------------------- */

typedef struct mrsim_scenario mrsim_scenario;
typedef struct mrsim_run mrsim_run;

MRSIM_API mrsim_status mrsim_scenario_load(const char* path, mrsim_scenario** out);
MRSIM_API mrsim_status mrsim_scenario_parse(const char* text, const char* base_dir, mrsim_scenario** out);
MRSIM_API void mrsim_scenario_free(mrsim_scenario* scenario);

MRSIM_API mrsim_status mrsim_scenario_set_seed(mrsim_scenario* scenario, uint64_t seed);
MRSIM_API mrsim_status mrsim_scenario_set_log_dir(mrsim_scenario* scenario, const char* dir);
MRSIM_API mrsim_status mrsim_scenario_set_duration(mrsim_scenario* scenario, double seconds);
MRSIM_API mrsim_status mrsim_scenario_set_bridge_port(mrsim_scenario* scenario, int port);
MRSIM_API mrsim_status mrsim_scenario_set_emulator_path(mrsim_scenario* scenario, const char* path);
MRSIM_API mrsim_status mrsim_scenario_set_realtime(mrsim_scenario* scenario, int realtime);
MRSIM_API size_t mrsim_scenario_robot_count(const mrsim_scenario* scenario);

MRSIM_API mrsim_status mrsim_scenario_run(const mrsim_scenario* scenario, mrsim_run** out);
MRSIM_API void mrsim_run_free(mrsim_run* run);

typedef struct mrsim_run_summary {
  int64_t ticks;
  size_t robots;
  size_t collisions;         /* all bases */
  size_t truth_collisions;   /* from emulator truth logs and virtual ground truth */
  double min_pair_distance;  /* truth basis; +inf with fewer than two robots */
  double min_pair_distance_runtime;
  size_t merges;
  size_t merges_complete;
  size_t decisions;
} mrsim_run_summary;

MRSIM_API mrsim_status mrsim_run_get_summary(const mrsim_run* run, mrsim_run_summary* out);
MRSIM_API const char* mrsim_run_log_dir(const mrsim_run* run);

MRSIM_API mrsim_status mrsim_run_robot_id(const mrsim_run* run, size_t index, int* id);
MRSIM_API mrsim_status mrsim_run_trajectory_size(const mrsim_run* run, int robot_id, size_t* size);
MRSIM_API mrsim_status mrsim_run_trajectory_sample(const mrsim_run* run, int robot_id, size_t index,
                                                   double* t, mrsim_pose2d* pose);
/* Emulated robots only; MRSIM_ERR_UNKNOWN_ROBOT otherwise. */
MRSIM_API mrsim_status mrsim_run_truth_size(const mrsim_run* run, int robot_id, size_t* size);
MRSIM_API mrsim_status mrsim_run_truth_sample(const mrsim_run* run, int robot_id, size_t index, double* t,
                                              mrsim_pose2d* pose);
MRSIM_API mrsim_status mrsim_run_localization_size(const mrsim_run* run, int robot_id, size_t* size);
MRSIM_API mrsim_status mrsim_run_localization_sample(const mrsim_run* run, int robot_id, size_t index,
                                                     double* t, double* error);

typedef enum mrsim_exit_decision {
  MRSIM_EXIT_NONE = 0,
  MRSIM_EXIT_GRANTED = 1,
  MRSIM_EXIT_DEFERRED = 2
} mrsim_exit_decision;

typedef struct mrsim_decision {
  const char* im; /* owned by the run */
  int cycle;
  double time;
  int robot_id;
  double velocity;
  int adjusted;
  double arrival;
  mrsim_exit_decision exit;
} mrsim_decision;

MRSIM_API mrsim_status mrsim_run_decision(const mrsim_run* run, size_t index, mrsim_decision* out);

typedef struct mrsim_merge {
  int robot_id;
  const char* im; /* owned by the run */
  double requested;
  double granted;   /* NaN if never */
  double departed;  /* NaN if never */
  double completed; /* NaN if never */
} mrsim_merge;

MRSIM_API mrsim_status mrsim_run_merge(const mrsim_run* run, size_t index, mrsim_merge* out);

typedef struct mrsim_collision {
  double t;
  int truth_basis; /* 1: truth, 0: runtime doppelgangers */
  int robot_a;
  int robot_b;     /* -1 for a robot-map contact */
  double distance;
} mrsim_collision;

MRSIM_API mrsim_status mrsim_run_collision(const mrsim_run* run, size_t index, mrsim_collision* out);

/* ---- logs ------------------------------------------------------------ */

/* *equal is 1 for identical logs; otherwise *record is the 1-based index of
 * the first differing record. */
MRSIM_API mrsim_status mrsim_replay_check(const char* log_a, const char* log_b, int* equal, size_t* record);

/* out_path may be NULL for <log_dir>/trajectories.svg. */
MRSIM_API mrsim_status mrsim_plot(const char* log_dir, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* MRSIM_MRSIM_H_ */
