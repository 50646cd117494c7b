#include "divlat/polyline.hpp"

#include "divlat/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace divlat {

namespace {

struct RPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RPoint&, const RPoint&) = default;
    friend bool operator<(const RPoint& a, const RPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

RPoint to_r(const IntPoint& p) { return RPoint{Rational(p[0]), Rational(p[1])}; }

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rational norm2(const RPoint& p) { return p.x * p.x + p.y * p.y; }

std::string show(const RPoint& p) {
    std::ostringstream os;
    os << '(' << p.x << ", " << p.y << ')';
    return os.str();
}

// ---- exact signs in Q(sqrt a, sqrt b) -------------------------------------

// sign of u + v*sqrt(a), a >= 0
int sign2(const Rational& u, const Rational& v, const Int& a) {
    const int su = sgn(u);
    const int sv = a.is_zero() ? 0 : sgn(v);
    if (sv == 0) {
        return su;
    }
    if (su == 0 || su == sv) {
        return su == 0 ? sv : su;
    }
    const int s = sgn(u * u - v * v * Rational(a));
    return su > 0 ? s : -s;
}

// sign of (c0 + c1 sqrt a) + (c2 + c3 sqrt a) sqrt b
int sign4(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3,
          const Int& a, const Int& b) {
    const int su = sign2(c0, c1, a);
    const int sv = b.is_zero() ? 0 : sign2(c2, c3, a);
    if (sv == 0) {
        return su;
    }
    if (su == 0 || su == sv) {
        return su == 0 ? sv : su;
    }
    const Rational ra(a);
    const Rational rb(b);
    // U^2 - V^2 b
    const Rational w0 = c0 * c0 + c1 * c1 * ra - (c2 * c2 + c3 * c3 * ra) * rb;
    const Rational w1 = 2 * c0 * c1 - 2 * c2 * c3 * rb;
    const int s = sign2(w0, w1, a);
    return su > 0 ? s : -s;
}

// point with coordinates x0 + x1 sqrt(rad), y0 + y1 sqrt(rad)
struct QuadPoint {
    Rational x0, x1, y0, y1;
    Int rad;
};

// where the line origin + t*dir meets the circle of radius r; the smaller or
// larger root of the quadratic in t
std::optional<QuadPoint> circle_point(const RPoint& origin, const RPoint& dir, long long r,
                                      bool larger) {
    const Rational a = dir.x * dir.x + dir.y * dir.y;
    const Rational b = 2 * (origin.x * dir.x + origin.y * dir.y);
    const Rational c = norm2(origin) - Rational(r) * Rational(r);
    const Rational disc = b * b - 4 * a * c;
    if (disc <= 0) {
        return std::nullopt;
    }
    const Int p = numerator(disc);
    const Int q = denominator(disc);
    const Rational scale = Rational(larger ? 1 : -1) / (2 * a * Rational(q));
    QuadPoint out;
    out.rad = p * q;
    out.x0 = origin.x - b * dir.x / (2 * a);
    out.y0 = origin.y - b * dir.y / (2 * a);
    out.x1 = dir.x * scale;
    out.y1 = dir.y * scale;
    return out;
}

bool upper_half(const QuadPoint& p) {
    const int sy = sign2(p.y0, p.y1, p.rad);
    return sy > 0 || (sy == 0 && sign2(p.x0, p.x1, p.rad) > 0);
}

// sign of cross(p, q)
int cross_sign(const QuadPoint& p, const QuadPoint& q) {
    return sign4(p.x0 * q.y0 - p.y0 * q.x0, p.x1 * q.y0 - p.y1 * q.x0,
                 p.x0 * q.y1 - p.y0 * q.x1, p.x1 * q.y1 - p.y1 * q.x1, p.rad, q.rad);
}

// counterclockwise angle order on [0, 2pi): -1, 0, +1
int angle_compare(const QuadPoint& p, const QuadPoint& q) {
    const bool hp = upper_half(p);
    const bool hq = upper_half(q);
    if (hp != hq) {
        return hp ? -1 : 1;
    }
    const int c = cross_sign(p, q);
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

bool direction_less(const IntPoint& a, const IntPoint& b) {
    auto upper = [](const IntPoint& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    if (upper(a) != upper(b)) {
        return upper(a);
    }
    return Int(a[0]) * b[1] - Int(a[1]) * b[0] > 0;
}

// ---- arrangement ------------------------------------------------------------

struct Segment {
    int branch = 0;
    int index = 0;
    IntPoint a{};
    IntPoint b{};
    IntPoint dir() const { return {b[0] - a[0], b[1] - a[1]}; }
};

struct Crossing {
    RPoint at;
    std::array<int, 2> segment{};
    std::array<Rational, 2> param;
    std::array<int, 4> slot{};  // slots of +dir0, -dir0, +dir1, -dir1
};

struct Event {
    Rational t;
    int crossing = -1;
};

int orient(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
    return sgn(Int(b[0] - a[0]) * (c[1] - a[1]) - Int(b[1] - a[1]) * (c[0] - a[0]));
}

struct Stop {
    enum Kind { Terminal, Cross, Bend } kind;
    RPoint at;
    int terminal = -1;
    int crossing = -1;
    int segment = -1;
};

struct Piece {
    RPoint from;
    RPoint to;
};

class Ingest {
public:
    explicit Ingest(const PolylineDivide& in) : in_(in), r2_(Rational(in.disc_radius) * in.disc_radius) {}

    Divide run();

private:
    void check_points();
    void build_segments();
    bool adjacent(int i, int j) const;
    void intersect_pairs();
    void order_terminals();
    void build_map();
    SignSeed locate_seed() const;

    void fail(const std::string& msg) { errors_.push_back(msg); }
    void flush() {
        if (!errors_.empty()) {
            throw DivideError(errors_);
        }
    }

    const PolylineDivide& in_;
    Rational r2_;
    std::vector<std::string> errors_;

    std::vector<Segment> segments_;
    std::vector<std::vector<int>> branch_segments_;
    std::vector<Crossing> crossings_;
    std::vector<std::vector<Event>> events_;  // per segment, sorted

    struct TerminalGeom {
        int branch;
        bool start;
        QuadPoint where;
    };
    std::vector<TerminalGeom> terminals_;           // counterclockwise
    std::vector<std::array<int, 2>> branch_terms_;  // terminal index of start/end

    Divide out_;
    std::vector<int> dp_of_crossing_;
    std::vector<std::vector<Piece>> pieces_;  // per edge
};

void Ingest::check_points() {
    if (in_.disc_radius <= 0) {
        fail("disc radius must be positive");
        flush();
    }
    for (std::size_t b = 0; b < in_.branches.size(); ++b) {
        const auto& pl = in_.branches[b];
        const std::string where = "branch " + std::to_string(b + 1);
        const auto n = pl.points.size();
        if ((!pl.closed && n < 2) || (pl.closed && n < 3)) {
            fail(where + ": too few points");
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const Rational r = norm2(to_r(pl.points[k]));
            const bool endpoint = !pl.closed && (k == 0 || k + 1 == n);
            if (r == r2_) {
                fail(where + ": vertex on the disc boundary");
            } else if (endpoint && r < r2_) {
                fail(where + ": open polyline endpoint inside the disc");
            } else if (!endpoint && r > r2_) {
                fail(where + ": interior vertex outside the disc");
            }
            const auto& next = pl.points[(k + 1) % n];
            if ((k + 1 < n || pl.closed) && next == pl.points[k]) {
                fail(where + ": repeated vertex");
            }
        }
        if (!pl.closed && n == 2) {
            const RPoint a = to_r(pl.points[0]);
            const RPoint d{Rational(pl.points[1][0] - pl.points[0][0]),
                           Rational(pl.points[1][1] - pl.points[0][1])};
            const Rational tmin = -(a.x * d.x + a.y * d.y) / (d.x * d.x + d.y * d.y);
            const RPoint closest{a.x + tmin * d.x, a.y + tmin * d.y};
            if (!(tmin > 0 && tmin < 1 && norm2(closest) < r2_)) {
                fail(where + ": open polyline does not enter the disc");
            }
        }
    }
    if (in_.branches.empty()) {
        fail("no branches");
    }
    flush();
}

void Ingest::build_segments() {
    branch_segments_.resize(in_.branches.size());
    for (std::size_t b = 0; b < in_.branches.size(); ++b) {
        const auto& pl = in_.branches[b];
        const auto n = pl.points.size();
        const auto count = pl.closed ? n : n - 1;
        for (std::size_t k = 0; k < count; ++k) {
            Segment s;
            s.branch = static_cast<int>(b);
            s.index = static_cast<int>(k);
            s.a = pl.points[k];
            s.b = pl.points[(k + 1) % n];
            branch_segments_[b].push_back(static_cast<int>(segments_.size()));
            segments_.push_back(s);
        }
        // a polyline doubling back on itself overlaps at its bend
        for (std::size_t k = 0; k + 1 < count + (pl.closed ? 1 : 0); ++k) {
            const Segment& s = segments_[branch_segments_[b][k]];
            const Segment& t = segments_[branch_segments_[b][(k + 1) % count]];
            const IntPoint u = s.dir();
            const IntPoint v = t.dir();
            if (Int(u[0]) * v[1] - Int(u[1]) * v[0] == 0 && Int(u[0]) * v[0] + Int(u[1]) * v[1] < 0) {
                fail("branch " + std::to_string(b + 1) + ": tangency or overlapping segments at a bend");
            }
        }
    }
    events_.resize(segments_.size());
    flush();
}

bool Ingest::adjacent(int i, int j) const {
    const Segment& s = segments_[i];
    const Segment& t = segments_[j];
    if (s.branch != t.branch) {
        return false;
    }
    const int count = static_cast<int>(branch_segments_[s.branch].size());
    const int diff = std::abs(s.index - t.index);
    if (diff == 1) {
        return true;
    }
    return in_.branches[s.branch].closed && diff == count - 1;
}

void Ingest::intersect_pairs() {
    std::map<RPoint, std::vector<int>> by_point;
    const int n = static_cast<int>(segments_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent(i, j)) {
                continue;
            }
            const Segment& s = segments_[i];
            const Segment& t = segments_[j];
            const int o1 = orient(s.a, s.b, t.a);
            const int o2 = orient(s.a, s.b, t.b);
            const int o3 = orient(t.a, t.b, s.a);
            const int o4 = orient(t.a, t.b, s.b);
            if (o1 == 0 && o2 == 0) {
                // collinear: overlap along the common line
                const IntPoint d = s.dir();
                auto proj = [&](const IntPoint& p) {
                    return Rational(Int(p[0] - s.a[0]) * d[0] + Int(p[1] - s.a[1]) * d[1]) /
                           Rational(Int(d[0]) * d[0] + Int(d[1]) * d[1]);
                };
                Rational lo = std::max(Rational(0), std::min(proj(t.a), proj(t.b)));
                Rational hi = std::min(Rational(1), std::max(proj(t.a), proj(t.b)));
                if (lo > hi) {
                    continue;
                }
                const RPoint a = to_r(s.a);
                const RPoint dir{Rational(d[0]), Rational(d[1])};
                // closest point of the overlap to the centre
                Rational tc = -(a.x * dir.x + a.y * dir.y) / (dir.x * dir.x + dir.y * dir.y);
                tc = std::clamp(tc, lo, hi);
                const RPoint c{a.x + tc * dir.x, a.y + tc * dir.y};
                if (norm2(c) < r2_) {
                    if (lo == hi) {
                        fail("intersection at a polyline vertex " + show(c));
                    } else {
                        fail("tangency or overlapping segments near " + show(c));
                    }
                } else if (norm2(c) == r2_) {
                    fail("curves meet on the disc boundary at " + show(c));
                }
                continue;
            }
            if (!(o1 * o2 <= 0 && o3 * o4 <= 0)) {
                continue;
            }
            const IntPoint di = s.dir();
            const IntPoint dj = t.dir();
            const Rational denom(Int(di[0]) * dj[1] - Int(di[1]) * dj[0]);
            const Rational ti(Int(t.a[0] - s.a[0]) * dj[1] - Int(t.a[1] - s.a[1]) * dj[0]);
            const Rational tj(Int(t.a[0] - s.a[0]) * di[1] - Int(t.a[1] - s.a[1]) * di[0]);
            const Rational pi = ti / denom;
            const Rational pj = tj / denom;
            const RPoint x{Rational(s.a[0]) + pi * di[0], Rational(s.a[1]) + pi * di[1]};
            const Rational r = norm2(x);
            if (r > r2_) {
                continue;
            }
            if (r == r2_) {
                fail("curves meet on the disc boundary at " + show(x));
                continue;
            }
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                fail("intersection at a polyline vertex " + show(x));
                continue;
            }
            Crossing c;
            c.at = x;
            c.segment = {i, j};
            c.param = {pi, pj};
            std::vector<std::pair<IntPoint, int>> dirs = {
                {di, 0}, {{-di[0], -di[1]}, 1}, {dj, 2}, {{-dj[0], -dj[1]}, 3}};
            std::sort(dirs.begin(), dirs.end(),
                      [](const auto& a, const auto& b) { return direction_less(a.first, b.first); });
            for (int k = 0; k < 4; ++k) {
                c.slot[dirs[k].second] = k;
            }
            by_point[x].push_back(static_cast<int>(crossings_.size()));
            crossings_.push_back(c);
        }
    }
    for (const auto& [p, list] : by_point) {
        if (list.size() > 1) {
            fail("triple point at " + show(p));
        }
    }
    flush();
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        for (int k = 0; k < 2; ++k) {
            events_[crossings_[c].segment[k]].push_back(Event{crossings_[c].param[k], c});
        }
    }
    for (auto& ev : events_) {
        std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    }
}

void Ingest::order_terminals() {
    branch_terms_.assign(in_.branches.size(), {-1, -1});
    std::vector<TerminalGeom> all;
    for (std::size_t b = 0; b < in_.branches.size(); ++b) {
        if (in_.branches[b].closed) {
            continue;
        }
        const Segment& first = segments_[branch_segments_[b].front()];
        const Segment& last = segments_[branch_segments_[b].back()];
        auto geom = [&](const Segment& s, bool larger) {
            const IntPoint d = s.dir();
            auto q = circle_point(to_r(s.a), RPoint{Rational(d[0]), Rational(d[1])},
                                  in_.disc_radius, larger);
            if (!q) {
                throw DivideError("tangency with the disc boundary on branch " + std::to_string(b + 1));
            }
            return *q;
        };
        all.push_back({static_cast<int>(b), true, geom(first, false)});
        all.push_back({static_cast<int>(b), false, geom(last, true)});
    }
    std::sort(all.begin(), all.end(), [](const TerminalGeom& a, const TerminalGeom& b) {
        return angle_compare(a.where, b.where) < 0;
    });
    for (std::size_t k = 0; k + 1 < all.size(); ++k) {
        if (angle_compare(all[k].where, all[k + 1].where) == 0) {
            fail("terminals coincide on the disc boundary");
        }
    }
    flush();
    terminals_ = all;
    for (std::size_t k = 0; k < all.size(); ++k) {
        branch_terms_[all[k].branch][all[k].start ? 0 : 1] = static_cast<int>(k);
    }
}

void Ingest::build_map() {
    out_.name = in_.name;
    dp_of_crossing_.assign(crossings_.size(), -1);

    // stops along each branch in traversal order
    std::vector<std::vector<Stop>> stops(in_.branches.size());
    for (std::size_t b = 0; b < in_.branches.size(); ++b) {
        const auto& segs = branch_segments_[b];
        const bool closed = in_.branches[b].closed;
        std::vector<Stop>& st = stops[b];
        if (!closed) {
            st.push_back(Stop{Stop::Terminal, to_r(segments_[segs.front()].a), branch_terms_[b][0], -1, -1});
        }
        for (std::size_t k = 0; k < segs.size(); ++k) {
            const int sid = segs[k];
            for (const Event& ev : events_[sid]) {
                st.push_back(Stop{Stop::Cross, crossings_[ev.crossing].at, -1, ev.crossing, sid});
            }
            if (k + 1 < segs.size() || closed) {
                st.push_back(Stop{Stop::Bend, to_r(segments_[sid].b), -1, -1, sid});
            }
        }
        if (!closed) {
            st.push_back(Stop{Stop::Terminal, to_r(segments_[segs.back()].b), branch_terms_[b][1], -1, -1});
        } else {
            auto first = std::find_if(st.begin(), st.end(), [](const Stop& s) { return s.kind == Stop::Cross; });
            if (first == st.end()) {
                fail("branch " + std::to_string(b + 1) + ": closed polyline without double points");
                continue;
            }
            std::rotate(st.begin(), first, st.end());
            st.push_back(st.front());
        }
        for (const Stop& s : st) {
            if (s.kind == Stop::Cross && dp_of_crossing_[s.crossing] < 0) {
                dp_of_crossing_[s.crossing] = static_cast<int>(out_.double_points.size());
                out_.double_points.push_back("p" + std::to_string(out_.double_points.size() + 1));
            }
        }
    }
    flush();
    const int d = static_cast<int>(out_.double_points.size());
    for (std::size_t k = 0; k < terminals_.size(); ++k) {
        out_.terminals.push_back("t" + std::to_string(k + 1));
    }

    auto slot_at = [&](const Stop& s, bool leaving) {
        if (s.kind == Stop::Terminal) {
            return EdgeEnd{d + s.terminal, 0};
        }
        const Crossing& c = crossings_[s.crossing];
        const int which = c.segment[0] == s.segment ? 0 : 1;
        return EdgeEnd{dp_of_crossing_[s.crossing], c.slot[2 * which + (leaving ? 0 : 1)]};
    };

    for (std::size_t b = 0; b < in_.branches.size(); ++b) {
        Branch br;
        br.kind = in_.branches[b].closed ? BranchKind::Circle : BranchKind::Interval;
        const auto& st = stops[b];
        std::size_t k = 0;
        while (k + 1 < st.size()) {
            Edge e;
            e.id = "e" + std::to_string(out_.edges.size() + 1);
            e.ends[0] = slot_at(st[k], true);
            std::vector<Piece> pieces;
            RPoint cur = st[k].at;
            std::size_t m = k + 1;
            while (true) {
                pieces.push_back(Piece{cur, st[m].at});
                cur = st[m].at;
                if (st[m].kind != Stop::Bend) {
                    break;
                }
                ++m;
            }
            e.ends[1] = slot_at(st[m], false);
            br.edges.push_back(static_cast<int>(out_.edges.size()));
            out_.edges.push_back(e);
            pieces_.push_back(std::move(pieces));
            k = m;
        }
        out_.branches.push_back(std::move(br));
    }
}

SignSeed Ingest::locate_seed() const {
    const RPoint w = to_r(in_.seed_point);
    if (!(norm2(w) < r2_)) {
        throw DivideError("witness point outside the disc");
    }
    for (const auto& list : pieces_) {
        for (const Piece& p : list) {
            const Rational c = cross(p.to.x - p.from.x, p.to.y - p.from.y, w.x - p.from.x, w.y - p.from.y);
            if (c != 0) {
                continue;
            }
            const Rational dot = (w.x - p.from.x) * (p.to.x - p.from.x) + (w.y - p.from.y) * (p.to.y - p.from.y);
            const Rational len = norm2(RPoint{p.to.x - p.from.x, p.to.y - p.from.y});
            if (dot >= 0 && dot <= len) {
                throw DivideError("witness point on a curve");
            }
        }
    }

    static const IntPoint directions[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1},
                                          {-1, -1}, {1, -1}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1},
                                          {-2, -1}, {-1, -2}, {1, -2}, {2, -1}, {3, 1}, {1, 3},
                                          {-3, 2}, {2, -3}};
    for (const IntPoint& di : directions) {
        const RPoint dir{Rational(di[0]), Rational(di[1])};
        bool ambiguous = false;
        std::optional<Rational> best;
        int best_edge = -1;
        Side best_side = Side::Left;
        bool tie = false;
        for (std::size_t e = 0; e < pieces_.size() && !ambiguous; ++e) {
            for (const Piece& p : pieces_[e]) {
                const RPoint seg{p.to.x - p.from.x, p.to.y - p.from.y};
                const RPoint rel{p.from.x - w.x, p.from.y - w.y};
                const Rational denom = cross(dir.x, dir.y, seg.x, seg.y);
                if (denom == 0) {
                    if (cross(rel.x, rel.y, dir.x, dir.y) == 0) {
                        ambiguous = true;
                        break;
                    }
                    continue;
                }
                const Rational s = cross(rel.x, rel.y, seg.x, seg.y) / denom;
                const Rational u = cross(rel.x, rel.y, dir.x, dir.y) / denom;
                if (s <= 0 || u < 0 || u > 1) {
                    continue;
                }
                const RPoint hit{w.x + s * dir.x, w.y + s * dir.y};
                if (norm2(hit) >= r2_) {
                    continue;
                }
                if (u == 0 || u == 1) {
                    ambiguous = true;
                    break;
                }
                if (!best || s < *best) {
                    best = s;
                    best_edge = static_cast<int>(e);
                    const Rational side = cross(seg.x, seg.y, w.x - p.from.x, w.y - p.from.y);
                    best_side = side > 0 ? Side::Left : Side::Right;
                    tie = false;
                } else if (s == *best) {
                    tie = true;
                }
            }
        }
        if (ambiguous || tie) {
            continue;
        }
        if (best) {
            return SignSeed{best_edge, best_side, in_.seed_sign};
        }
        if (terminals_.empty()) {
            throw DivideError("witness point lies outside every closed curve of a divide without terminals");
        }
        const auto exit = circle_point(w, dir, in_.disc_radius, true);
        std::size_t before = 0;
        bool on_terminal = false;
        for (const auto& t : terminals_) {
            const int c = angle_compare(t.where, *exit);
            if (c == 0) {
                on_terminal = true;
            } else if (c < 0) {
                ++before;
            }
        }
        if (on_terminal) {
            continue;
        }
        const int tv = out_.num_double_points() + static_cast<int>(before % terminals_.size());
        for (int e = 0; e < out_.num_edges(); ++e) {
            if (out_.edges[e].ends[0].vertex == tv) {
                return SignSeed{e, Side::Left, in_.seed_sign};
            }
            if (out_.edges[e].ends[1].vertex == tv) {
                return SignSeed{e, Side::Right, in_.seed_sign};
            }
        }
    }
    throw DivideError("cannot locate the witness point: every probe ray is degenerate");
}

Divide Ingest::run() {
    check_points();
    build_segments();
    intersect_pairs();
    order_terminals();
    build_map();
    out_.sign_seed = locate_seed();
    require_valid(out_);
    return out_;
}

} // namespace

Divide ingest_polyline(const PolylineDivide& input) {
    return Ingest(input).run();
}

} // namespace divlat
