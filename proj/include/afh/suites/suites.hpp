#pragma once

#include "afh/catalog/catalog.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace afh {

enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string value;     // exact witness ("p/q" strings, dimensions, tags)
  std::string expected;  // empty for informational values
  double seconds = 0;
};

struct Section {
  std::string title;
  std::vector<CheckResult> checks;

  bool failed() const;
};

// Runs independent section builders on up to `jobs` threads and returns the
// sections in input order.
std::vector<Section> run_parallel(const std::vector<std::function<Section()>>& tasks, unsigned jobs);

// Full pipeline on one surface: symmetry, filtration, jet, L1, orbit, tube.
Section analyze_surface(const std::string& title, const Hypersurface& s);

// Quadric checks for one n (n >= 1).
Section verify_theorem1(std::size_t n);

// Verification chain for one Lorentzian normal form (n >= 4).
Section verify_theorem2(const SurfaceId& id);
// The surface ids covered by the Lorentzian suite for one n.
std::vector<SurfaceId> theorem2_ids(std::size_t n);

// Real-side group checks with `samples` seeded random parameter tuples.
Section verify_section6_real(std::size_t n, std::uint64_t seed, int samples = 20);
// Holomorphic fields: tangency, closure, isotropy, sl2.
Section verify_section6_fields(std::size_t n);
// Chern-Moser expansion against the printed pieces (cap >= 6).
Section verify_section6_cm(std::size_t n, int cap);

}  // namespace afh
