#pragma once

#include <cstdint>
#include <string>

namespace hangersim {

// All lengths in meters, angles in radians. One sim step is 0.1 s of
// wall-clock time (10 Hz control), so the 600-step stall budget is one
// minute and the 1200-step hard cap is two minutes per insertion phase.
struct SimConfig {
  // Workspace bounds.
  double workspace_x_min = 0.0;
  double workspace_x_max = 1.0;
  double workspace_y_min = 0.0;
  double workspace_y_max = 1.0;

  // Hanger geometry: a straight bar of half-span `hanger_half_span`,
  // rendered and collision-checked with `hanger_leg_thickness`.
  double hanger_half_span = 0.12;
  double hanger_leg_thickness = 0.01;

  // Collar opening: a rectangular notch in the shirt's top edge, centered at
  // collar_gap_center_x with the given width. The notch rim sits on the top
  // edge; the notch floor is collar_notch_depth below it.
  double collar_gap_center_x = 0.50;
  double collar_gap_width = 0.12;
  double collar_notch_depth = 0.03;
  // A leg counts as inserted while its tip is within this depth below the
  // notch floor (and within the gap horizontally).
  double collar_entry_depth = 0.12;

  // Uniform randomization of the free (ungrasped) shoulder height: +/- range.
  double shoulder_offset_range = 0.02;

  // Simulated IR coverage sensors: covered level h, uncovered level l,
  // additive Gaussian noise sigma (readings clipped to [0, 1]).
  double sensor_high = 0.9;
  double sensor_low = 0.05;
  double sensor_sigma = 0.02;

  // Fabric drag before the shirt is pulled out of the static gripper.
  double snag_slip_threshold = 0.03;
  // Inflation applied to the gripper exclusion box for collision checks.
  double collision_margin = 0.005;

  // Left-gripper release: opening crosses the threshold (with hysteresis)
  // -> the shirt is let go.
  double release_threshold = 0.5;
  double release_hysteresis = 0.05;

  // Hanger center height at which the lift is considered complete.
  double lift_y = 0.72;

  // Per-step tracking limits of the first-order rate limiter.
  double max_xy_step = 0.01;
  double max_theta_step = 0.05;
  double max_gripper_step = 0.05;

  // Control rate (steps per second) and timeout budgets in steps.
  int steps_per_second = 10;
  int stall_budget = 600;
  int hard_cap = 1200;

  // Occupancy grid resolutions (cells per side).
  int scene_grid = 32;
  int wrist_grid = 16;

  // PRNG algorithm identifier (documents the stream construction) and the
  // master seed every derived stream hangs off.
  std::string rng_algorithm = "mt19937_64/boxmuller/mt-v1";
  std::uint64_t master_seed = 1;

  double gap_lo() const { return collar_gap_center_x - 0.5 * collar_gap_width; }
  double gap_hi() const { return collar_gap_center_x + 0.5 * collar_gap_width; }

  // Throws std::invalid_argument when an invariant is violated:
  // sensor separability h > l + 5*sigma, stall_budget <= hard_cap,
  // positive lengths, grid sizes >= 8.
  void validate() const;
};

}  // namespace hangersim
