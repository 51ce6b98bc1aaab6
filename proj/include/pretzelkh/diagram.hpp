#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pkh {

// One endpoint of an edge: crossing index and rotational slot 0..3.
struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
    bool operator==(const EdgeEnd&) const = default;
};

// Crossing of a planar diagram. The 4 incident edges are listed
// counterclockwise starting at the incoming under-strand, so the under-strand
// runs slot 0 -> slot 2 and the over-strand occupies slots 1 and 3.
struct Crossing {
    std::array<int, 4> edge{-1, -1, -1, -1};
};

struct DiagramStats {
    int writhe = 0;
    int seifert_circle_count = 0;
    int strongly_negative_count = 0;
    int non_negative_count = 0;
    int n_plus = 0;
    int n_minus = 0;
};

struct BennequinBounds {
    int lower_plain = 0;
    std::optional<int> lower_sharper;  // absent when no non-negative Seifert circle
};

// Circles of a complete smoothing. Bit k of `state` set means the
// 1-smoothing (slots 0-1 and 2-3 joined) at crossing k; clear means the
// 0-smoothing (slots 0-3 and 1-2). Free loops occupy the trailing ids.
struct SmoothingCircles {
    int count = 0;
    std::vector<uint8_t> circle_of_edge;
};

// Oriented link diagram as a PD code with signs. Edges are numbered along
// the orientation within each component; free (crossingless) loops are
// counted separately since they carry no edges.
class LinkDiagram {
public:
    LinkDiagram() = default;
    // Validates closedness, slot conventions, orientation consistency, signs.
    // `tails` optionally pins each edge's starting endpoint; without it the
    // orientation is recovered from the incoming-under convention, which
    // fails loudly if some component never passes under another strand.
    LinkDiagram(std::vector<Crossing> crossings, int edge_count, int free_loops,
                std::vector<EdgeEnd> tails = {});

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    int free_loop_count() const { return free_loops_; }
    int component_count() const { return component_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int sign(int crossing) const { return signs_[crossing]; }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    int writhe() const { return n_plus_ - n_minus_; }
    // Where edge e starts (tail) and ends (head) along the orientation.
    EdgeEnd tail(int e) const { return tail_[e]; }
    EdgeEnd head(int e) const { return head_[e]; }
    int component_of_edge(int e) const { return component_of_edge_[e]; }

    SmoothingCircles smooth(uint64_t state) const;

private:
    // derives signs, endpoints, components; checks invariants
    void finalize(const std::vector<EdgeEnd>& given_tails);

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    int free_loops_ = 0;
    std::vector<int> signs_;
    std::vector<EdgeEnd> tail_, head_;
    std::vector<int> component_of_edge_;
    int component_count_ = 0;
    int n_plus_ = 0, n_minus_ = 0;
};

using OrientationChoice = std::optional<std::vector<bool>>;

// Standard diagram of the (p,q,r)-pretzel link: three vertical bands of
// signed half twists joined in a ring; a zero band is two parallel strands.
LinkDiagram pretzel_diagram(int p, int q, int r, const OrientationChoice& orientation_choice = {});

// Standard |n|-crossing diagram of the (2,n)-torus link.
LinkDiagram torus2_diagram(int n, const OrientationChoice& orientation_choice = {});

// Replace one crossing by its 0- or 1-smoothing. Components whose orientation
// survives the smoothing keep it; others take the override or the default.
LinkDiagram resolve(const LinkDiagram& d, int crossing_index, int smoothing,
                    const OrientationChoice& orientation_choice = {});

LinkDiagram mirror(const LinkDiagram& d);

DiagramStats stats(const LinkDiagram& d);

// Slice-genus lower bounds from the writhe and Seifert-circle counts:
// plain w - O + 1, sharper w - (O_>= - O_<) + 1. Knots only.
BennequinBounds slice_bennequin_bounds(const LinkDiagram& d);

// Knot signature via the Goeritz form of a checkerboard coloring with the
// Gordon-Litherland correction term.
int signature(const LinkDiagram& d);

long long omega(long long p, long long q, long long r);

std::string diagram_to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const std::string& text);

}  // namespace pkh
