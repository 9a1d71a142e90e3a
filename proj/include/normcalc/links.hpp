#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normcalc/common.hpp"

namespace normcalc {

// An oriented link diagram given by a PD code. Each crossing is a 4-tuple of
// arc labels listed counterclockwise starting at the incoming under-strand;
// the over-strand direction is inferred by orientation traversal. A crossing
// is positive exactly when its over-strand enters at tuple position 3.
class LinkDiagram {
  public:
    // The empty code is accepted as the standard 0-crossing unknot diagram.
    static LinkDiagram from_pd(const std::vector<std::array<int64_t, 4>>& crossings);

    const std::vector<std::array<int64_t, 4>>& crossings() const { return crossings_; }
    const std::vector<int64_t>& arcs() const { return arcs_; }
    const std::vector<std::vector<int64_t>>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const std::vector<int>& signs() const { return signs_; }

    int component_of(int64_t arc) const;
    // position (1 or 3) at which the over-strand enters crossing ci
    int over_in_pos(int ci) const { return over_in_pos_[ci]; }
    // arc label following `arc` along its oriented component
    int64_t next_arc(int64_t arc) const;

    int writhe() const;

  private:
    std::vector<std::array<int64_t, 4>> crossings_;
    std::vector<int64_t> arcs_;
    std::vector<std::vector<int64_t>> components_;
    std::map<int64_t, int> component_of_;
    std::map<int64_t, int64_t> next_;
    std::vector<int> signs_;
    std::vector<int> over_in_pos_;
};

// Integer cohomology class recorded by its pairings with the meridians.
struct CohomologyClass {
    std::vector<int64_t> pairings;

    int size() const { return static_cast<int>(pairings.size()); }
    int64_t meridian_sum() const;  // sum of |<h, mu_i>|
};

LinkDiagram parse_pd(const std::string& text);

// Entry (i,j), i != j, is half the signed count of crossings between
// components i and j; diagonal entries are zero.
std::vector<std::vector<int64_t>> linking_matrix(const LinkDiagram& d);

bool is_alternating(const LinkDiagram& d);
bool is_connected_projection(const LinkDiagram& d);

}  // namespace normcalc
