#include "snake/simworld.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "snake/errors.hpp"
#include "snake/rng.hpp"

namespace snake {

namespace {

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

}  // namespace

// ---------------------------------------------------------------------------
// Peg array

void PegArray::build_grid(double cell_size) {
  cell_ = cell_size;
  ox_ = -extent_x / 2.0 - cell_;
  oy_ = -extent_y / 2.0 - cell_;
  nx_ = static_cast<int>(std::ceil((extent_x + 2.0 * cell_) / cell_)) + 1;
  ny_ = static_cast<int>(std::ceil((extent_y + 2.0 * cell_) / cell_)) + 1;
  cells_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), {});
  for (int i = 0; i < static_cast<int>(pegs.size()); ++i) {
    const auto& p = pegs[static_cast<std::size_t>(i)];
    int cx = std::clamp(static_cast<int>((p.x - ox_) / cell_), 0, nx_ - 1);
    int cy = std::clamp(static_cast<int>((p.y - oy_) / cell_), 0, ny_ - 1);
    cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(i);
  }
}

void PegArray::query_segment(double x0, double y0, double x1, double y1,
                             double margin, std::vector<int>& out) const {
  out.clear();
  if (cells_.empty()) {
    for (int i = 0; i < static_cast<int>(pegs.size()); ++i) out.push_back(i);
    return;
  }
  const double lo_x = std::min(x0, x1) - margin, hi_x = std::max(x0, x1) + margin;
  const double lo_y = std::min(y0, y1) - margin, hi_y = std::max(y0, y1) + margin;
  int cx0 = std::clamp(static_cast<int>((lo_x - ox_) / cell_), 0, nx_ - 1);
  int cx1 = std::clamp(static_cast<int>((hi_x - ox_) / cell_), 0, nx_ - 1);
  int cy0 = std::clamp(static_cast<int>((lo_y - oy_) / cell_), 0, ny_ - 1);
  int cy1 = std::clamp(static_cast<int>((hi_y - oy_) / cell_), 0, ny_ - 1);
  for (int cy = cy0; cy <= cy1; ++cy)
    for (int cx = cx0; cx <= cx1; ++cx)
      for (int i : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) out.push_back(i);
}

PegArray spawn_peg_array(std::uint64_t seed, double density, double min_spacing,
                         double extent_x, double extent_y, double radius) {
  if (!(min_spacing > 2.0 * radius))
    throw std::invalid_argument("spawn_peg_array: min_spacing must exceed peg diameter");
  if (!(density >= 0.0) || !(extent_x > 0.0) || !(extent_y > 0.0))
    throw std::invalid_argument("spawn_peg_array: bad density or extent");

  PegArray array;
  array.radius = radius;
  array.extent_x = extent_x;
  array.extent_y = extent_y;

  const auto target =
      static_cast<std::size_t>(std::llround(density * extent_x * extent_y));
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> ux(-extent_x / 2.0, extent_x / 2.0);
  std::uniform_real_distribution<double> uy(-extent_y / 2.0, extent_y / 2.0);

  // Dart throwing with a min-spacing grid; cell = spacing so only the 5x5
  // neighborhood needs checking.
  const double cell = min_spacing;
  const int gx = std::max(1, static_cast<int>(std::ceil(extent_x / cell)));
  const int gy = std::max(1, static_cast<int>(std::ceil(extent_y / cell)));
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(gx) * gy);
  auto cell_of = [&](double x, double y) {
    int cx = std::clamp(static_cast<int>((x + extent_x / 2.0) / cell), 0, gx - 1);
    int cy = std::clamp(static_cast<int>((y + extent_y / 2.0) / cell), 0, gy - 1);
    return std::pair<int, int>(cx, cy);
  };

  const std::size_t budget = 200 * std::max<std::size_t>(target, 1);
  std::size_t attempts = 0;
  while (array.pegs.size() < target) {
    if (++attempts > budget)
      throw ConfigError("spawn_peg_array: unsatisfiable density/spacing after " +
                        std::to_string(budget) + " attempts");
    const double x = ux(rng), y = uy(rng);
    const auto [cx, cy] = cell_of(x, y);
    bool ok = true;
    for (int dy = -2; dy <= 2 && ok; ++dy) {
      for (int dx = -2; dx <= 2 && ok; ++dx) {
        const int nx = cx + dx, ny = cy + dy;
        if (nx < 0 || ny < 0 || nx >= gx || ny >= gy) continue;
        for (int i : grid[static_cast<std::size_t>(ny) * gx + nx]) {
          const auto& p = array.pegs[static_cast<std::size_t>(i)];
          const double ddx = p.x - x, ddy = p.y - y;
          if (ddx * ddx + ddy * ddy < min_spacing * min_spacing) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    grid[static_cast<std::size_t>(cy) * gx + cx].push_back(
        static_cast<int>(array.pegs.size()));
    array.pegs.push_back({x, y});
  }
  array.build_grid(std::max(0.25, 4.0 * radius));
  return array;
}

// ---------------------------------------------------------------------------
// World

void WorldConfig::validate() const {
  if (n_joints < 2) throw std::invalid_argument("world: n_joints must be >= 2");
  if (!(link_length > 0.0 && link_halfwidth > 0.0 && node_mass > 0.0))
    throw std::invalid_argument("world: link geometry/mass must be positive");
  if (!(dt_phys > 0.0)) throw std::invalid_argument("world: dt_phys must be > 0");
  if (!(abort_energy > 0.0)) throw std::invalid_argument("world: abort_energy must be > 0");
}

World::World(const WorldConfig& cfg, PegArray pegs, const Pose2& pose,
             std::span<const double> initial_joint_angles)
    : cfg_(cfg), pegs_(std::move(pegs)) {
  cfg_.validate();
  if (initial_joint_angles.size() != static_cast<std::size_t>(cfg_.n_joints))
    throw std::invalid_argument("world: initial joint angle count mismatch");

  n_ang_ = 1 + cfg_.n_joints;
  mass_total_ = cfg_.node_mass * cfg_.n_nodes();

  q_ = Eigen::VectorXd::Zero(2 + n_ang_);
  v_ = Eigen::VectorXd::Zero(2 + n_ang_);
  q_(2) = pose.yaw;
  for (int i = 0; i < cfg_.n_joints; ++i)
    q_(3 + i) = initial_joint_angles[static_cast<std::size_t>(i)];

  const int links = cfg_.n_links();
  const int nodes = cfg_.n_nodes();
  psi_.resize(static_cast<std::size_t>(links));
  ang_rate_.resize(static_cast<std::size_t>(links));
  dir_.resize(static_cast<std::size_t>(links));
  node_.resize(static_cast<std::size_t>(nodes));
  node_vel_.resize(static_cast<std::size_t>(nodes));
  recoil_.resize(static_cast<std::size_t>(n_ang_));
  gcol_.resize(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(n_ang_));
  mass_ang_.resize(n_ang_, n_ang_);
  q_ang_.resize(n_ang_);
  accel_ang_.resize(n_ang_);
  torque_accum_.resize(static_cast<std::size_t>(cfg_.n_joints));
  forces_.reserve(128);

  // Place the chain so the geometric center lands on the requested pose.
  forward_kinematics();
  const Vec2 g0 = geometric_center();
  q_(0) = pose.x - g0.x;
  q_(1) = pose.y - g0.y;
  forward_kinematics();
}

// Node/link kinematics from the generalized coordinates. Shape is built from
// a virtual head at the origin and then recentered so q(0..1) is the chain
// center of mass.
void World::forward_kinematics() {
  const int links = cfg_.n_links();
  const int nodes = cfg_.n_nodes();
  const double len = cfg_.link_length;

  double psi = q_(2);
  double rate = v_(2);
  Vec2 pos{0.0, 0.0};
  Vec2 vel{0.0, 0.0};
  Vec2 pos_sum{0.0, 0.0};
  Vec2 vel_sum{0.0, 0.0};
  node_[0] = pos;
  node_vel_[0] = vel;
  for (int k = 0; k < links; ++k) {
    if (k > 0) {
      psi += q_(3 + k - 1);
      rate += v_(3 + k - 1);
    }
    psi_[static_cast<std::size_t>(k)] = psi;
    ang_rate_[static_cast<std::size_t>(k)] = rate;
    const Vec2 d{std::cos(psi), std::sin(psi)};
    dir_[static_cast<std::size_t>(k)] = d;
    pos_sum = pos_sum + pos;
    vel_sum = vel_sum + vel;
    pos = pos + len * d;
    vel = vel + (rate * len) * perp(d);
    node_[static_cast<std::size_t>(k + 1)] = pos;
    node_vel_[static_cast<std::size_t>(k + 1)] = vel;
  }
  pos_sum = pos_sum + pos;
  vel_sum = vel_sum + vel;

  const Vec2 mean_pos = (1.0 / nodes) * pos_sum;
  const Vec2 mean_vel = (1.0 / nodes) * vel_sum;
  const Vec2 shift = Vec2{q_(0), q_(1)} - mean_pos;
  const Vec2 vshift = Vec2{v_(0), v_(1)} - mean_vel;
  for (int k = 0; k < nodes; ++k) {
    node_[static_cast<std::size_t>(k)] = node_[static_cast<std::size_t>(k)] + shift;
    node_vel_[static_cast<std::size_t>(k)] =
        node_vel_[static_cast<std::size_t>(k)] + vshift;
  }
}

// Friction and peg contact forces at link-fixed points, accumulated into the
// generalized force (CM rows in force_cm_, angle rows in q_ang_) and recorded
// for torque sensing.
void World::accumulate_external_forces() {
  forces_.clear();
  const int links = cfg_.n_links();
  const double len = cfg_.link_length;

  auto apply = [&](int link, Vec2 point, Vec2 f, int peg_id) {
    force_cm_ = force_cm_ + f;
    for (int c = 0; c < n_ang_; ++c) {
      const int pivnode = c == 0 ? 0 : c;
      double g = 0.0;
      if (link >= pivnode) {
        const Vec2 arm = point - node_[static_cast<std::size_t>(pivnode)];
        g = cross(arm, f);
      }
      // CM-recoil compensation applies to every column.
      g -= dot(recoil_[static_cast<std::size_t>(c)], f);
      q_ang_(c) += g;
    }
    forces_.push_back({f.x, f.y, point.x, point.y, peg_id, link});
  };

  // Anisotropic viscous ground friction, two sample points per link.
  const double us[2] = {0.25 * len, 0.75 * len};
  for (int k = 0; k < links; ++k) {
    const Vec2 d = dir_[static_cast<std::size_t>(k)];
    const Vec2 n = perp(d);
    for (double u : us) {
      const Vec2 p = node_[static_cast<std::size_t>(k)] + u * d;
      const Vec2 vp = node_vel_[static_cast<std::size_t>(k)] +
                      (ang_rate_[static_cast<std::size_t>(k)] * u) * perp(d);
      const double vt = dot(vp, d);
      const double vn = dot(vp, n);
      const Vec2 f = (-cfg_.friction_tangent * vt) * d + (-cfg_.friction_normal * vn) * n;
      if (f.x != 0.0 || f.y != 0.0) apply(k, p, f, -1);
    }
  }

  // Peg contacts: capsule versus circle, penalty normal plus regularized
  // Coulomb tangential force.
  if (!pegs_.pegs.empty()) {
    const double reach = pegs_.radius + cfg_.link_halfwidth;
    for (int k = 0; k < links; ++k) {
      const Vec2 a = node_[static_cast<std::size_t>(k)];
      const Vec2 b = node_[static_cast<std::size_t>(k + 1)];
      pegs_.query_segment(a.x, a.y, b.x, b.y, reach + 0.05, peg_candidates_);
      const Vec2 d = dir_[static_cast<std::size_t>(k)];
      for (int pi : peg_candidates_) {
        const auto& peg = pegs_.pegs[static_cast<std::size_t>(pi)];
        const Vec2 pc{peg.x, peg.y};
        const double u = std::clamp(dot(pc - a, d), 0.0, len);
        const Vec2 cp = a + u * d;
        const Vec2 delta = cp - pc;
        const double dist = std::sqrt(dot(delta, delta));
        const double pen = reach - dist;
        if (pen <= 0.0) continue;
        const Vec2 nhat = dist > 1e-9 ? (1.0 / dist) * delta : perp(d);
        const Vec2 vp = node_vel_[static_cast<std::size_t>(k)] +
                        (ang_rate_[static_cast<std::size_t>(k)] * u) * perp(d);
        const double pen_rate = -dot(vp, nhat);
        double fn = cfg_.contact_stiffness * pen + cfg_.contact_damping * pen_rate;
        if (fn < 0.0) fn = 0.0;  // pegs push, never pull
        const Vec2 that = perp(nhat);
        const double vt = dot(vp, that);
        // Widen the Coulomb regularization under heavy squeeze so the
        // explicit tangential slope mu*fn/v_reg stays inside the stable
        // region of the integrator.
        const double vreg = std::max(
            cfg_.slip_regularization,
            cfg_.peg_mu * fn * cfg_.dt_phys / (0.25 * cfg_.node_mass));
        const double ft = -cfg_.peg_mu * fn * std::tanh(vt / vreg);
        const Vec2 f = fn * nhat + ft * that;
        if (fn > 0.0) apply(k, cp, f, pi);
      }
    }
  }
}

void World::substep(std::span<const double> commanded) {
  forward_kinematics();

  const int nodes = cfg_.n_nodes();
  const double m = cfg_.node_mass;
  const double dt = cfg_.dt_phys;

  // Suffix sums for the CM-recoil term of each angle column:
  // pivnode(c) = 0 for psi0 and c for theta_{c-1}; distal nodes are pivnode+1..
  {
    static thread_local std::vector<Vec2> suffix_pos;
    suffix_pos.assign(static_cast<std::size_t>(nodes + 1), Vec2{0.0, 0.0});
    for (int k = nodes - 1; k >= 0; --k)
      suffix_pos[static_cast<std::size_t>(k)] =
          suffix_pos[static_cast<std::size_t>(k + 1)] + node_[static_cast<std::size_t>(k)];
    for (int c = 0; c < n_ang_; ++c) {
      const int pivnode = c == 0 ? 0 : c;
      const int count = nodes - (pivnode + 1);
      const Vec2 sum = suffix_pos[static_cast<std::size_t>(pivnode + 1)];
      const double w = m * count / mass_total_;
      const Vec2 rel =
          (m / mass_total_) * sum - w * node_[static_cast<std::size_t>(pivnode)];
      recoil_[static_cast<std::size_t>(c)] = perp(rel);
    }
  }

  // Jacobian columns per node.
  for (int k = 0; k < nodes; ++k) {
    const Vec2 nk = node_[static_cast<std::size_t>(k)];
    Vec2* row = &gcol_[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ang_)];
    for (int c = 0; c < n_ang_; ++c) {
      const int pivnode = c == 0 ? 0 : c;
      Vec2 g{0.0, 0.0};
      if (k > pivnode) g = perp(nk - node_[static_cast<std::size_t>(pivnode)]);
      row[c] = g - recoil_[static_cast<std::size_t>(c)];
    }
  }

  // Angle-block mass matrix (the CM block is diagonal by construction).
  mass_ang_.setZero();
  for (int k = 0; k < nodes; ++k) {
    const Vec2* row = &gcol_[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ang_)];
    for (int a = 0; a < n_ang_; ++a) {
      const Vec2 ga = row[a];
      for (int b = a; b < n_ang_; ++b)
        mass_ang_(a, b) += m * (ga.x * row[b].x + ga.y * row[b].y);
    }
  }

  // Generalized forces.
  q_ang_.setZero();
  force_cm_ = Vec2{0.0, 0.0};
  accumulate_external_forces();

  // Joint PD toward the commanded angles; damping goes implicit via the
  // mass-matrix diagonal to stay stable at light distal inertias.
  for (int i = 0; i < cfg_.n_joints; ++i) {
    const double theta = q_(3 + i);
    const double rate = v_(3 + i);
    double tau = cfg_.joint_kp * (commanded[static_cast<std::size_t>(i)] - theta) -
                 cfg_.joint_kd * rate;
    mass_ang_(1 + i, 1 + i) += dt * cfg_.joint_kd;
    if (theta > cfg_.joint_stop) {
      tau += -cfg_.stop_stiffness * (theta - cfg_.joint_stop) - cfg_.stop_damping * rate;
      mass_ang_(1 + i, 1 + i) += dt * cfg_.stop_damping;
    } else if (theta < -cfg_.joint_stop) {
      tau += -cfg_.stop_stiffness * (theta + cfg_.joint_stop) - cfg_.stop_damping * rate;
      mass_ang_(1 + i, 1 + i) += dt * cfg_.stop_damping;
    }
    q_ang_(1 + i) += tau;
  }

  // Velocity-product bias: node accelerations at zero generalized
  // acceleration, recentered so the CM rows vanish identically.
  {
    static thread_local std::vector<Vec2> abias;
    abias.assign(static_cast<std::size_t>(nodes), Vec2{0.0, 0.0});
    Vec2 acc{0.0, 0.0};
    Vec2 acc_sum{0.0, 0.0};
    for (int k = 0; k < cfg_.n_links(); ++k) {
      const double w = ang_rate_[static_cast<std::size_t>(k)];
      acc_sum = acc_sum + acc;
      acc = acc - (w * w * cfg_.link_length) * dir_[static_cast<std::size_t>(k)];
      abias[static_cast<std::size_t>(k + 1)] = acc;
    }
    acc_sum = acc_sum + acc;
    const Vec2 mean = (1.0 / nodes) * acc_sum;
    for (int k = 0; k < nodes; ++k) {
      const Vec2 ak = abias[static_cast<std::size_t>(k)] - mean;
      const Vec2* row =
          &gcol_[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ang_)];
      for (int c = 0; c < n_ang_; ++c)
        q_ang_(c) -= m * (row[c].x * ak.x + row[c].y * ak.y);
    }
  }

  // Semi-implicit Euler: velocities first, then positions.
  for (int a = 0; a < n_ang_; ++a)
    for (int b = a + 1; b < n_ang_; ++b) mass_ang_(b, a) = mass_ang_(a, b);
  ldlt_.compute(mass_ang_);
  accel_ang_ = ldlt_.solve(q_ang_);
  v_(0) += dt * force_cm_.x / mass_total_;
  v_(1) += dt * force_cm_.y / mass_total_;
  for (int c = 0; c < n_ang_; ++c) v_(2 + c) += dt * accel_ang_(c);
  q_ += dt * v_;

  // Average the sensed external torques across the control interval.
  for (const auto& f : forces_) {
    const Vec2 fv{f.fx, f.fy};
    const Vec2 p{f.px, f.py};
    for (int i = 0; i < std::min(f.link_id, cfg_.n_joints); ++i) {
      const Vec2 arm = p - node_[static_cast<std::size_t>(i + 1)];
      torque_accum_[static_cast<std::size_t>(i)] += cross(arm, fv);
    }
  }
}

JointReadings World::step(std::span<const double> commanded_angles, double dt_control) {
  if (commanded_angles.size() != static_cast<std::size_t>(cfg_.n_joints))
    throw std::invalid_argument("world step: commanded angle count mismatch");
  for (double c : commanded_angles)
    if (!std::isfinite(c)) throw std::invalid_argument("world step: non-finite command");
  if (!(dt_control > 0.0)) throw std::invalid_argument("world step: dt must be > 0");

  const int n_sub = std::max(1, static_cast<int>(std::lround(dt_control / cfg_.dt_phys)));
  std::fill(torque_accum_.begin(), torque_accum_.end(), 0.0);
  for (int s = 0; s < n_sub; ++s) substep(commanded_angles);
  time_ += dt_control;

  if (!q_.allFinite() || !v_.allFinite())
    throw SimulationDiverged("world state left the finite range at t=" +
                             std::to_string(time_));
  forward_kinematics();
  const double ke = kinetic_energy();
  if (ke > cfg_.abort_energy)
    throw SimulationDiverged("kinetic energy " + std::to_string(ke) +
                             " J exceeded the abort bound at t=" + std::to_string(time_));

  JointReadings readings;
  readings.angle = joint_angles();
  readings.rate = joint_rates();
  readings.external_torque.resize(static_cast<std::size_t>(cfg_.n_joints));
  for (int i = 0; i < cfg_.n_joints; ++i)
    readings.external_torque[static_cast<std::size_t>(i)] =
        torque_accum_[static_cast<std::size_t>(i)] / n_sub;
  return readings;
}

LinkPose World::link_pose(int link) const {
  const Vec2 a = node_[static_cast<std::size_t>(link)];
  const Vec2 b = node_[static_cast<std::size_t>(link + 1)];
  return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y), psi_[static_cast<std::size_t>(link)]};
}

Vec2 World::node_position(int node) const { return node_[static_cast<std::size_t>(node)]; }

std::vector<double> World::joint_angles() const {
  std::vector<double> out(static_cast<std::size_t>(cfg_.n_joints));
  for (int i = 0; i < cfg_.n_joints; ++i) out[static_cast<std::size_t>(i)] = q_(3 + i);
  return out;
}

std::vector<double> World::joint_rates() const {
  std::vector<double> out(static_cast<std::size_t>(cfg_.n_joints));
  for (int i = 0; i < cfg_.n_joints; ++i) out[static_cast<std::size_t>(i)] = v_(3 + i);
  return out;
}

Vec2 World::geometric_center() const {
  Vec2 sum{0.0, 0.0};
  for (int k = 0; k < cfg_.n_links(); ++k) {
    const Vec2 a = node_[static_cast<std::size_t>(k)];
    const Vec2 b = node_[static_cast<std::size_t>(k + 1)];
    sum = sum + Vec2{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  }
  return (1.0 / cfg_.n_links()) * sum;
}

Vec2 World::linear_momentum() const {
  return {mass_total_ * v_(0), mass_total_ * v_(1)};
}

double World::kinetic_energy() const {
  double ke = 0.5 * mass_total_ * (v_(0) * v_(0) + v_(1) * v_(1));
  for (int k = 0; k < cfg_.n_nodes(); ++k) {
    const Vec2 v = node_vel_[static_cast<std::size_t>(k)];
    const Vec2 vr = v - Vec2{v_(0), v_(1)};
    ke += 0.5 * cfg_.node_mass * dot(vr, vr);
  }
  return ke;
}

double World::max_peg_penetration() const {
  double worst = 0.0;
  const double reach = pegs_.radius + cfg_.link_halfwidth;
  for (const auto& f : forces_) {
    if (f.peg_id < 0) continue;
    const auto& peg = pegs_.pegs[static_cast<std::size_t>(f.peg_id)];
    const double dx = f.px - peg.x, dy = f.py - peg.y;
    worst = std::max(worst, reach - std::sqrt(dx * dx + dy * dy));
  }
  return worst;
}

std::vector<double> World::torques_from_forces(
    const std::vector<ContactForce>& forces) const {
  std::vector<double> tau(static_cast<std::size_t>(cfg_.n_joints), 0.0);
  for (const auto& f : forces) {
    const Vec2 fv{f.fx, f.fy};
    const Vec2 p{f.px, f.py};
    // Joint i sits at node i+1 and carries forces on links i+1..; the sensed
    // torque is the moment of those forces about the joint.
    for (int i = 0; i < std::min(f.link_id, cfg_.n_joints); ++i) {
      const Vec2 arm = p - node_[static_cast<std::size_t>(i + 1)];
      tau[static_cast<std::size_t>(i)] += cross(arm, fv);
    }
  }
  return tau;
}

Vec2 geometric_center(const World& world) { return world.geometric_center(); }

}  // namespace snake
