#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace snake {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Peg {
  double x = 0.0;
  double y = 0.0;
};

// Static circular pegs with a uniform grid for broad-phase queries.
struct PegArray {
  std::vector<Peg> pegs;
  double radius = 0.04;
  double extent_x = 0.0;  // array centered on the origin
  double extent_y = 0.0;

  void build_grid(double cell_size);
  // Indices of pegs whose centers fall within `margin` of the segment AABB.
  void query_segment(double x0, double y0, double x1, double y1, double margin,
                     std::vector<int>& out) const;

 private:
  double cell_ = 0.5;
  int nx_ = 0, ny_ = 0;
  double ox_ = 0.0, oy_ = 0.0;
  std::vector<std::vector<int>> cells_;
};

// Deterministic-in-seed Poisson-disk placement targeting `density` pegs per
// square meter over a centered extent_x x extent_y rectangle. Throws
// ConfigError when the density cannot be met within the retry budget.
PegArray spawn_peg_array(std::uint64_t seed, double density, double min_spacing,
                         double extent_x, double extent_y, double radius);

struct WorldConfig {
  int n_joints = 16;
  double link_length = 0.1;      // m, capsule axis length
  double link_halfwidth = 0.025; // m, capsule radius
  double node_mass = 0.15;       // kg, lumped at link endpoints
  double joint_kp = 40.0;        // N*m/rad
  double joint_kd = 4.0;         // N*m*s/rad (integrated implicitly)
  double friction_tangent = 0.3; // N*s/m per sample point, along the link
  double friction_normal = 3.0;  // N*s/m per sample point, across the link
  double contact_stiffness = 2500.0;  // N/m
  double contact_damping = 30.0;      // N*s/m
  double peg_mu = 0.3;
  double slip_regularization = 0.01;  // m/s, Coulomb tanh width
  double dt_phys = 1e-3;
  double joint_stop = 3.14159265358979323846;  // rad hard stop
  double stop_stiffness = 200.0;
  double stop_damping = 5.0;
  double abort_energy = 50.0;  // J; kinetic energy beyond this aborts the trial

  void validate() const;
  int n_links() const { return n_joints + 1; }
  int n_nodes() const { return n_joints + 2; }
  double body_length() const { return n_links() * link_length; }
};

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // orientation of the first link
};

struct LinkPose {
  double x = 0.0;  // link center
  double y = 0.0;
  double yaw = 0.0;
};

struct JointReadings {
  std::vector<double> angle;
  std::vector<double> rate;
  std::vector<double> external_torque;  // averaged over the control interval
};

struct ContactForce {
  double fx = 0.0, fy = 0.0;  // world frame
  double px = 0.0, py = 0.0;  // application point
  int peg_id = -1;            // -1 for ground friction
  int link_id = -1;
};

// Planar articulated chain: n_joints+1 capsule links joined by revolute
// joints, masses lumped at the link endpoints, anisotropic viscous ground
// friction, penalty peg contacts and per-joint PD tracking of commanded
// angles. Generalized coordinates are the chain center of mass, the head-link
// orientation and the relative joint angles, so internal torques leave the
// total linear momentum untouched by construction.
class World {
 public:
  World(const WorldConfig& cfg, PegArray pegs, const Pose2& pose,
        std::span<const double> initial_joint_angles);

  // Advance one control interval holding the commanded joint angles;
  // substeps internally at cfg.dt_phys. Throws SimulationDiverged when the
  // state leaves the configured energy bound or stops being finite.
  JointReadings step(std::span<const double> commanded_angles, double dt_control);

  double time() const { return time_; }
  int n_joints() const { return cfg_.n_joints; }
  int n_links() const { return cfg_.n_links(); }
  const WorldConfig& config() const { return cfg_; }
  const PegArray& pegs() const { return pegs_; }

  LinkPose link_pose(int link) const;
  Vec2 node_position(int node) const;
  std::vector<double> joint_angles() const;
  std::vector<double> joint_rates() const;
  Vec2 geometric_center() const;  // mean of link centers
  Vec2 linear_momentum() const;
  double kinetic_energy() const;
  double max_peg_penetration() const;

  // External forces applied during the most recent substep.
  const std::vector<ContactForce>& last_forces() const { return forces_; }

  // Head-anchored Jacobian-transpose mapping of external forces to per-joint
  // torques: tau_i collects the moments, about joint i, of forces acting on
  // links tailward of it.
  std::vector<double> torques_from_forces(const std::vector<ContactForce>& forces) const;

 private:
  void forward_kinematics();
  void accumulate_external_forces();
  void substep(std::span<const double> commanded);

  WorldConfig cfg_;
  PegArray pegs_;
  double time_ = 0.0;

  int n_ang_ = 0;      // angle coordinates: psi0 + joint angles
  double mass_total_ = 0.0;

  Eigen::VectorXd q_;  // [x_cm, y_cm, psi0, theta...]
  Eigen::VectorXd v_;

  // per-substep scratch
  std::vector<double> psi_, ang_rate_;  // per link
  std::vector<Vec2> dir_;               // per link unit direction
  std::vector<Vec2> node_, node_vel_;   // per node, world frame
  std::vector<Vec2> recoil_;            // per angle column
  std::vector<Vec2> gcol_;              // node x angle column Jacobian entries
  Eigen::MatrixXd mass_ang_;
  Eigen::VectorXd q_ang_, accel_ang_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
  Vec2 force_cm_;
  std::vector<ContactForce> forces_;
  std::vector<double> torque_accum_;
  std::vector<int> peg_candidates_;
};

Vec2 geometric_center(const World& world);

}  // namespace snake
