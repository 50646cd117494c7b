#pragma once

// Combinatorial divides: an immersed family of intervals and circles in a
// disc, stored as a planar map with an explicit rotation system.
//
// Vertex indexing: double points occupy [0, d), terminals occupy [d, d + t).
// Double points have four slots numbered counterclockwise; slots s and s+2
// are the two halves of the same branch passing straight through. Terminals
// have a single slot 0 and are listed in counterclockwise order along the
// disc boundary.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace divlat {

class DivideError : public std::runtime_error {
public:
    explicit DivideError(std::vector<std::string> diagnostics);
    DivideError(const std::string& single);

    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

enum class Sign : int { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

enum class Side { Left, Right };

struct EdgeEnd {
    int vertex = -1;
    int slot = -1;
    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
    std::string id;
    std::array<EdgeEnd, 2> ends;  // declared orientation: ends[0] -> ends[1]
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class BranchKind { Interval, Circle };

struct Branch {
    std::vector<int> edges;
    BranchKind kind = BranchKind::Interval;
    friend bool operator==(const Branch&, const Branch&) = default;
};

// Witness face: the face to the left or right of `edge` (relative to its
// declared orientation) carries `sign`.
struct SignSeed {
    int edge = -1;
    Side side = Side::Left;
    Sign sign = Sign::Minus;
    friend bool operator==(const SignSeed&, const SignSeed&) = default;
};

struct Divide {
    std::string name;
    std::vector<std::string> double_points;
    std::vector<std::string> terminals;
    std::vector<Edge> edges;
    std::vector<Branch> branches;
    SignSeed sign_seed;

    int num_double_points() const { return static_cast<int>(double_points.size()); }
    int num_terminals() const { return static_cast<int>(terminals.size()); }
    int num_vertices() const { return num_double_points() + num_terminals(); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    bool is_terminal(int v) const { return v >= num_double_points(); }
    int degree(int v) const { return is_terminal(v) ? 1 : 4; }
    const std::string& vertex_id(int v) const;
    int terminal_index(int v) const { return v - num_double_points(); }
    int terminal_vertex(int i) const { return num_double_points() + i; }

    friend bool operator==(const Divide&, const Divide&) = default;
};

// Every structural problem of `d`, empty when valid. Checks slot usage,
// degrees, id uniqueness, connectivity, the branch partition against the
// straight-through strands, and the sign seed.
std::vector<std::string> validate(const Divide& d);

// Throws DivideError listing every problem found by validate().
void require_valid(const Divide& d);

// Straight-through strands of the rotation system: each entry lists edge
// indices in traversal order. Intervals run terminal to terminal.
std::vector<Branch> trace_strands(const Divide& d);

// Seed naming the face that occupies quadrant `q` (between slots q and q+1)
// of double point `dp`.
SignSeed seed_at_quadrant(const Divide& d, int dp, int q, Sign sign);

// Half-edge incidence for a divide with virtual boundary arcs. Divide edge e
// yields half-edges 2e (ends[0] -> ends[1]) and 2e+1; boundary arc i runs
// from terminal i to terminal i+1 (cyclically) and yields half-edges
// 2E+2i (counterclockwise) and 2E+2i+1.
class HalfEdges {
public:
    explicit HalfEdges(const Divide& d);

    int count() const { return static_cast<int>(tail_.size()); }
    int num_divide_half_edges() const { return 2 * num_edges_; }
    bool is_arc(int h) const { return h >= 2 * num_edges_; }
    bool is_forward_arc(int h) const { return is_arc(h) && (h % 2 == 0); }
    int edge_of(int h) const { return h / 2; }
    static int twin(int h) { return h ^ 1; }
    int tail(int h) const { return tail_[h]; }
    int head(int h) const { return tail_[twin(h)]; }

    // Half-edges leaving v in counterclockwise order.
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    // Leaving half-edge of double point dp through slot s.
    int leaving(int dp, int slot) const { return rotation_[dp][slot]; }

    // Next half-edge along the face to the left of h: step to the head and
    // take the next half-edge clockwise from the twin.
    int next(int h) const;

private:
    int num_edges_ = 0;
    std::vector<int> tail_;
    std::vector<int> position_;  // index of h within rotation(tail(h))
    std::vector<std::vector<int>> rotation_;
};

} // namespace divlat
