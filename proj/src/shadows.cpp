#include "roller/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "roller/error.hpp"
#include "roller/kernels.hpp"

namespace roller {

namespace {

Exact level(const WallFamily& f, std::int64_t n) { return Exact(f.offset + f.spacing * Rational(n)); }

ExactVec negated(const ExactVec& v) {
    ExactVec w;
    for (const auto& x : v) w.push_back(-x);
    return w;
}

std::size_t normal_rank(const Geometry& G) {
    // rank over the field of the normals, by elimination
    std::vector<ExactVec> rows;
    for (const auto& f : G.families) rows.push_back(f.normal);
    const std::size_t cols = G.dim();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            Exact f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// slab lo..hi per chain, given as offsets of wall indices: lo wall c-1-a, hi wall c+b
bool slabs_feasible(const ConsistencyOracle& O, const Cuts& c, const std::vector<std::int64_t>& down,
                    const std::vector<std::int64_t>& up) {
    std::vector<ChainHalfspace> hs;
    for (std::size_t i = 0; i < c.size(); ++i) {
        hs.push_back({i, c[i] - 1 - down[i], false});
        hs.push_back({i, c[i] + up[i], true});
    }
    return O.set_consistent(hs);
}

void odometer(std::size_t k, std::int64_t W, const std::function<void(const Cuts&)>& f) {
    Cuts c(k, -W);
    if (k == 0) {
        f(c);
        return;
    }
    while (true) {
        f(c);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] < W) {
                ++c[i];
                break;
            }
            c[i] = -W;
            if (i == 0) return;
        }
    }
}

Cuts cuts_of(const ChainUltrafilter& u) { return u.cuts(); }

std::string cuts_str(const Cuts& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

std::vector<ChainRange> dual_of(const std::vector<Cuts>& shadow, std::size_t k) {
    std::vector<ChainRange> d(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = std::numeric_limits<std::int64_t>::min();
        for (const auto& s : shadow) {
            lo = std::min(lo, s[i]);
            hi = std::max(hi, s[i]);
        }
        d[i] = {lo - 1, hi};
    }
    return d;
}

}  // namespace

ConsistencyOracle::ConsistencyOracle(const Geometry& G) : G_(&G) {
    const std::size_t k = G.chains(), d = G.dim();
    free_ = d > 0 && normal_rank(G) == k;
    if (k == d + 1 && d > 0 && normal_rank(G) == d) {
        ExactVec sum(d);
        for (const auto& f : G.families)
            for (std::size_t j = 0; j < d; ++j) sum[j] += f.normal[j];
        interval_ = std::all_of(sum.begin(), sum.end(), [](const Exact& x) { return x.is_zero(); });
    }
}

bool ConsistencyOracle::consistent_general(const Cuts& c) const {
    if (c.size() != G_->chains()) throw Error(Errc::ChainCountMismatch, "cut tuple length");
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& f = G_->families[i];
        cs.push_back({negated(f.normal), -level(f, c[i] - 1)});
        cs.push_back({f.normal, level(f, c[i])});
    }
    return feasible(cs, G_->dim());
}

bool ConsistencyOracle::consistent_interval(const Cuts& c) const {
    if (!interval_) throw Error(Errc::Unsupported, "interval form needs dim+1 normals summing to zero");
    if (c.size() != G_->chains()) throw Error(Errc::ChainCountMismatch, "cut tuple length");
    Rational lo(0), hi(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& f = G_->families[i];
        lo += f.offset + f.spacing * Rational(c[i] - 1);
        hi += f.offset + f.spacing * Rational(c[i]);
    }
    return lo.sign() <= 0 && hi.sign() >= 0;
}

bool ConsistencyOracle::consistent(const Cuts& c) const {
    if (free_) {
        if (c.size() != G_->chains()) throw Error(Errc::ChainCountMismatch, "cut tuple length");
        return true;
    }
    return interval_ ? consistent_interval(c) : consistent_general(c);
}

bool ConsistencyOracle::set_consistent(const std::vector<ChainHalfspace>& hs) const {
    std::vector<LinearConstraint> cs;
    for (const auto& h : hs) {
        const auto& f = G_->families.at(h.chain);
        if (h.star) cs.push_back({f.normal, level(f, h.pos)});
        else cs.push_back({negated(f.normal), -level(f, h.pos)});
    }
    return feasible(cs, G_->dim());
}

bool is_consistent(const Geometry& G, const ChainUltrafilter& u) { return ConsistencyOracle(G).consistent(u.cuts()); }

std::vector<Cuts> enumerate_pi0(const Geometry& G, std::int64_t W) {
    if (W < 0) throw Error(Errc::MalformedInput, "window must be non-negative");
    ConsistencyOracle O(G);
    std::vector<Cuts> out;
    odometer(G.chains(), W, [&](const Cuts& c) {
        if (O.consistent(c)) out.push_back(c);
    });
    return out;
}

Pi0Index::Pi0Index(const Geometry& G, std::int64_t W) : W_(W), k_(G.chains()) {
    if (W < 0 || W > (1 << 20)) throw Error(Errc::MalformedInput, "window out of range");
    auto pts = enumerate_pi0(G, W);
    count_ = pts.size();
    soa_.resize(k_ * count_);
    for (std::size_t j = 0; j < count_; ++j)
        for (std::size_t c = 0; c < k_; ++c) soa_[c * count_ + j] = static_cast<std::int32_t>(pts[j][c]);
}

Cuts Pi0Index::point(std::size_t j) const {
    Cuts p(k_);
    for (std::size_t c = 0; c < k_; ++c) p[c] = soa_[c * count_ + j];
    return p;
}

namespace {
std::vector<std::int32_t> query32(const Cuts& q, std::size_t k) {
    if (q.size() != k) throw Error(Errc::ChainCountMismatch, "query length");
    std::vector<std::int32_t> out;
    for (auto x : q) {
        if (x < -(1 << 24) || x > (1 << 24)) throw Error(Errc::Overflow, "cut out of kernel range");
        out.push_back(static_cast<std::int32_t>(x));
    }
    return out;
}
}  // namespace

std::int64_t Pi0Index::dist(const Cuts& q) const {
    auto q32 = query32(q, k_);
    if (count_ == 0) throw Error(Errc::WindowTooSmall, "no consistent tuple in window " + std::to_string(W_));
    return kernels::l1_min(soa_.data(), k_, count_, q32.data());
}

std::vector<Cuts> Pi0Index::nearest(const Cuts& q, std::int64_t* dist_out) const {
    auto q32 = query32(q, k_);
    if (count_ == 0) throw Error(Errc::WindowTooSmall, "no consistent tuple in window " + std::to_string(W_));
    std::vector<std::int32_t> d(count_);
    kernels::l1_distances(soa_.data(), k_, count_, q32.data(), d.data());
    std::int32_t m = *std::min_element(d.begin(), d.end());
    std::vector<Cuts> out;
    for (std::size_t j = 0; j < count_; ++j) {
        if (d[j] != m) continue;
        Cuts p = point(j);
        for (auto x : p)
            if (x == W_ || x == -W_)
                throw Error(Errc::WindowTooSmall,
                            "minimizer " + cuts_str(p) + " of " + cuts_str(q) + " on edge of window " + std::to_string(W_));
        out.push_back(std::move(p));
    }
    if (dist_out) *dist_out = m;
    return out;
}

std::int64_t dist_to_pi0(const Pi0Index& idx, const ChainUltrafilter& u) {
    std::int64_t d = 0;
    idx.nearest(cuts_of(u), &d);
    return d;
}

bool dual_subset(const std::vector<ChainRange>& a, const std::vector<ChainRange>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].plain_max > b[i].plain_max || a[i].star_min < b[i].star_min) return false;
    return true;
}

bool dual_contains(const std::vector<ChainRange>& d, const ChainHalfspace& h) {
    const auto& r = d.at(h.chain);
    return h.star ? h.pos >= r.star_min : h.pos <= r.plain_max;
}

bool dual_inside_pi(const std::vector<ChainRange>& d, const Cuts& pi) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i].plain_max > pi[i] - 1 || d[i].star_min < pi[i]) return false;
    return true;
}

MinClasses classify_min(const Pi0Index& idx, const ChainUltrafilter& u) {
    MinClasses m;
    const std::int64_t d0 = dist_to_pi0(idx, u);
    for (const auto& a : chain_min_set(u)) {
        std::int64_t d1 = dist_to_pi0(idx, chain_flip(u, a));
        (d1 > d0 ? m.plus : (d1 < d0 ? m.minus : m.neutral)).push_back(a);
    }
    return m;
}

ShadowReport shadow_report(const Geometry& G, const Pi0Index& idx, const ChainUltrafilter& u) {
    ShadowReport r;
    r.pi = cuts_of(u);
    r.window = idx.window();
    r.shadow = idx.nearest(r.pi, &r.dist);
    r.consistent = r.dist == 0;
    r.mins = classify_min(idx, u);
    r.dual_shadow = dual_of(r.shadow, r.pi.size());
    r.plus_in_dual = std::all_of(r.mins.plus.begin(), r.mins.plus.end(),
                                 [&](const ChainHalfspace& h) { return dual_contains(r.dual_shadow, h); });
    r.dual_in_pi = dual_inside_pi(r.dual_shadow, r.pi);
    r.three_down = r.mins.minus.size() >= 3;
    r.minus_inconsistent = !ConsistencyOracle(G).set_consistent(r.mins.minus);
    return r;
}

ShadowReport shadow_report(const Geometry& G, const ChainUltrafilter& u, std::int64_t W) {
    for (std::int64_t w = std::max<std::int64_t>(W, 1);; w *= 2) {
        try {
            Pi0Index idx(G, w);
            return shadow_report(G, idx, u);
        } catch (const Error& e) {
            if (e.code() != Errc::WindowTooSmall || w > 512) throw;
        }
    }
}

bool level_set_holds(const Geometry& G, const Cuts& pi, std::int64_t dist) {
    ConsistencyOracle O(G);
    const std::size_t k = pi.size();
    // spread m removals over the 2k chain ends; removing the top of a ray is always best
    auto exists = [&](std::int64_t m) {
        std::vector<std::int64_t> slot(2 * k, 0);
        std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) -> bool {
            if (i + 1 == 2 * k) {
                slot[i] = left;
                std::vector<std::int64_t> down(k), up(k);
                for (std::size_t c = 0; c < k; ++c) {
                    down[c] = slot[2 * c];
                    up[c] = slot[2 * c + 1];
                }
                return slabs_feasible(O, pi, down, up);
            }
            for (std::int64_t x = 0; x <= left; ++x) {
                slot[i] = x;
                if (rec(i + 1, left - x)) return true;
            }
            return false;
        };
        return k == 0 ? true : rec(0, m);
    };
    if (!exists(dist)) return false;
    return dist == 0 || !exists(dist - 1);
}

namespace {

struct RayWalker {
    const Geometry& G;
    const Pi0Index& idx;

    EscapeReport run(const Signature& target, std::size_t N) const {
        EscapeReport R;
        R.target = target;
        R.window = idx.window();
        R.in_image = in_image(G, target);
        Schedule sch = flow_schedule(target);
        if (sch.period.empty()) throw Error(Errc::MalformedInput, "escaping ray needs a non-principal class");
        std::size_t tick = 0;
        auto next_move = [&](const ChainUltrafilter& u) {
            const Move& m = sch.period[tick++ % sch.period.size()];
            std::int64_t c = u.chains[m.chain].cut;
            return m.dir > 0 ? ChainHalfspace{m.chain, c, true} : ChainHalfspace{m.chain, c - 1, false};
        };

        ChainUltrafilter cur = ChainUltrafilter::from_cuts(Cuts(target.size(), 0));
        R.start = cur.cuts();
        std::int64_t dcur = dist_to_pi0(idx, cur);
        // walk the distance-0 plateau until the next move leaves it
        ChainHalfspace mv{};
        while (true) {
            std::size_t saved = tick;
            mv = next_move(cur);
            ChainUltrafilter nx = chain_flip(cur, mv);
            std::int64_t dn = dist_to_pi0(idx, nx);
            if (dcur != 0 || dn > dcur) {
                tick = saved;
                break;
            }
            if (R.launch_offset == N) {
                R.failure_step = 1;
                R.reason = "distance to Pi0 stays 0 along " + std::to_string(N) + " flow moves";
                return R;
            }
            cur = nx;
            dcur = dn;
            ++R.launch_offset;
        }

        ShadowReport rep = shadow_report(G, idx, cur);
        RayStep first;
        first.cuts = rep.pi;
        first.dist = rep.dist;
        R.ray.push_back(first);
        for (std::size_t step = 1; step <= N; ++step) {
            mv = next_move(cur);
            ChainUltrafilter nx = chain_flip(cur, mv);
            ShadowReport nrep = shadow_report(G, idx, nx);
            RayStep s;
            s.cuts = nrep.pi;
            s.dist = nrep.dist;
            s.move = mv;
            s.move_in_min_plus = std::find(rep.mins.plus.begin(), rep.mins.plus.end(), mv) != rep.mins.plus.end();
            s.dual_shrinks = dual_subset(nrep.dual_shadow, rep.dual_shadow) && nrep.dual_shadow != rep.dual_shadow;
            std::set<Cuts> big(nrep.shadow.begin(), nrep.shadow.end());
            s.shadow_grows = nrep.shadow.size() > rep.shadow.size() &&
                             std::all_of(rep.shadow.begin(), rep.shadow.end(), [&](const Cuts& c) { return big.count(c) > 0; });
            R.ray.push_back(s);
            std::string why;
            if (s.dist <= rep.dist) why = "distance did not increase (" + std::to_string(rep.dist) + " -> " + std::to_string(s.dist) + ")";
            else if (!s.move_in_min_plus) why = "move is not in min_plus";
            else if (!s.dual_shrinks) why = "dual shadow did not shrink";
            else if (!s.shadow_grows) why = "shadow did not grow";
            if (!why.empty()) {
                R.failure_step = step;
                R.reason = why;
                return R;
            }
            cur = nx;
            rep = std::move(nrep);
        }
        R.success = true;
        return R;
    }
};

}  // namespace

EscapeReport escaping_ray(const Geometry& G, const Signature& target, std::size_t N, std::int64_t W) {
    if (target.size() != G.chains()) throw Error(Errc::ChainCountMismatch, "signature length");
    for (std::int64_t w = std::max<std::int64_t>(W, 1);; w *= 2) {
        try {
            Pi0Index idx(G, w);
            return RayWalker{G, idx}.run(target, N);
        } catch (const Error& e) {
            if (e.code() != Errc::WindowTooSmall || w > 512) throw;
        }
    }
}

WindowMax max_delta(const Geometry& G, std::int64_t W) {
    const std::size_t k = G.chains();
    // distances are trusted once no point outside the Pi0 window can be closer
    std::int64_t wp = 2 * W + 1;
    while (true) {
        Pi0Index idx(G, wp);
        WindowMax best{W, -1, {}};
        odometer(k, W, [&](const Cuts& q) {
            std::int64_t d = idx.dist(q);
            if (d > best.max_delta) best = {W, d, q};
        });
        if (best.max_delta <= wp - W) return best;
        wp = W + best.max_delta + 1;
    }
}

SurjectivityReport surjectivity_report(const Geometry& G, const std::vector<std::int64_t>& windows, std::size_t ray_length) {
    SurjectivityReport R;
    R.uniform = is_uniform(G);
    if (!R.uniform) R.warnings.push_back("NonUniformModel: normals do not span");
    const std::size_t k = G.chains();
    for (const auto& s : all_signatures(k)) {
        ClassRow row{s, class_codim(s).value, in_image(G, s)};
        if (row.codim > 0) {
            ++R.nonprincipal;
            if (row.in_image) ++R.nonprincipal_in_image;
        }
        R.classes.push_back(row);
    }
    for (auto W : windows) R.sweep.push_back(max_delta(G, W));
    R.delta_grows = R.sweep.size() >= 2 && R.sweep.back().max_delta > 0;
    for (std::size_t i = 1; i < R.sweep.size(); ++i)
        if (R.sweep[i].max_delta <= R.sweep[i - 1].max_delta) R.delta_grows = false;

    // classes outside the image first: that is where rays are predicted
    std::vector<const ClassRow*> order;
    for (const auto& row : R.classes)
        if (row.codim > 0 && !row.in_image) order.push_back(&row);
    for (const auto& row : R.classes)
        if (row.codim > 0 && row.in_image) order.push_back(&row);
    for (const ClassRow* row : order) {
        EscapeReport e = escaping_ray(G, row->signature, ray_length);
        if (e.success) {
            R.escape = e;
            break;
        }
    }
    bool missed = R.nonprincipal_in_image < R.nonprincipal;
    R.contract_ok = R.delta_grows ? missed : true;
    return R;
}

FellowTravel fellow_travel(const Geometry& G, const Signature& target, std::size_t steps) {
    const std::size_t k = G.chains(), d = G.dim();
    if (target.size() != k) throw Error(Errc::ChainCountMismatch, "signature length");
    std::vector<std::size_t> axis(k);
    std::vector<int> orient(k);
    std::vector<char> used(d, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& n = G.families[i].normal;
        std::size_t nz = 0, at = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (!n[j].is_zero()) {
                ++nz;
                at = j;
            }
        if (nz != 1 || (n[at] != Exact(1) && n[at] != Exact(-1)) || used[at])
            throw Error(Errc::Unsupported, "fellow travel check needs coordinate normals");
        used[at] = 1;
        axis[i] = at;
        orient[i] = n[at].sign();
    }
    auto centre = [&](const ChainUltrafilter& u) {
        ExactVec p(d);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& f = G.families[i];
            Exact v = Exact(f.offset) + Exact(f.spacing) * (Exact(u.chains[i].cut) - Exact(Rational(1, 2)));
            p[axis[i]] = orient[i] > 0 ? v : -v;
        }
        return p;
    };
    ExactVec xi(d);
    for (std::size_t i = 0; i < k; ++i) {
        int s = target.ends[i] == End::Plus ? 1 : (target.ends[i] == End::Minus ? -1 : 0);
        xi[axis[i]] = Exact(G.families[i].spacing * Rational(s * orient[i]));
    }
    FellowTravel F;
    F.target = target;
    F.steps = steps;
    ChainUltrafilter u = ChainUltrafilter::from_cuts(Cuts(k, 0));
    const ExactVec p0 = centre(u);
    for (std::size_t n = 0; n <= steps; ++n) {
        ExactVec p = centre(u);
        for (std::size_t j = 0; j < d; ++j) {
            Exact gap = (p[j] - p0[j] - Exact(static_cast<std::int64_t>(n)) * xi[j]).abs();
            if (gap > F.max_gap) F.max_gap = gap;
        }
        u = flow_step(target, u);
    }
    F.within_one = F.max_gap <= Exact(1);
    return F;
}

namespace {

using P2 = std::pair<double, double>;

// keep the part of poly with a*x + b*y <= c
std::vector<P2> clip(const std::vector<P2>& poly, double a, double b, double c) {
    std::vector<P2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        P2 p = poly[i], q = poly[(i + 1) % poly.size()];
        double fp = a * p.first + b * p.second - c, fq = a * q.first + b * q.second - c;
        if (fp <= 0) out.push_back(p);
        if ((fp < 0) != (fq < 0) && fp != fq) {
            double t = fp / (fp - fq);
            out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
        }
    }
    return out;
}

}  // namespace

std::string shadow_svg(const Geometry& G, const ShadowReport& r) {
    if (G.dim() != 2) throw Error(Errc::Unsupported, "svg needs a planar model");
    std::int64_t reach = 2;
    for (const auto& s : r.shadow)
        for (auto x : s) reach = std::max<std::int64_t>(reach, std::abs(x) + 2);
    for (auto x : r.pi) reach = std::max<std::int64_t>(reach, std::abs(x) + 2);
    double smax = 0;
    for (const auto& f : G.families) smax = std::max(smax, f.spacing.to_double() + std::abs(f.offset.to_double()));
    const double R = reach * smax, px = 480.0 / (2 * R);
    auto X = [&](double x) { return 10 + (x + R) * px; };
    auto Y = [&](double y) { return 10 + (R - y) * px; };

    std::ostringstream o;
    char buf[160];
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"500\" height=\"500\" fill=\"white\"/>\n";
    const std::vector<P2> box = {{-R, -R}, {R, -R}, {R, R}, {-R, R}};
    auto polygon = [&](const Cuts& c, const char* fill) {
        std::vector<P2> poly = box;
        for (std::size_t i = 0; i < c.size() && !poly.empty(); ++i) {
            const auto& f = G.families[i];
            double a = f.normal[0].to_double(), b = f.normal[1].to_double();
            poly = clip(poly, a, b, level(f, c[i]).to_double());
            if (!poly.empty()) poly = clip(poly, -a, -b, -level(f, c[i] - 1).to_double());
        }
        if (poly.size() < 3) return;
        o << "<polygon fill=\"" << fill << "\" stroke=\"none\" points=\"";
        for (const auto& p : poly) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", X(p.first), Y(p.second));
            o << buf;
        }
        o << "\"/>\n";
    };
    for (const auto& s : r.shadow) polygon(s, "#9ecae1");
    if (r.consistent) polygon(r.pi, "#fdae6b");

    for (std::size_t i = 0; i < G.chains(); ++i) {
        const auto& f = G.families[i];
        double a = f.normal[0].to_double(), b = f.normal[1].to_double(), nn = a * a + b * b;
        std::int64_t M = static_cast<std::int64_t>(std::ceil((R * std::sqrt(2 * nn) + std::abs(f.offset.to_double())) /
                                                             f.spacing.to_double()));
        for (std::int64_t n = -M; n <= M; ++n) {
            double v = level(f, n).to_double();
            double bx = a * v / nn, by = b * v / nn, dx = -b, dy = a;
            double t0 = -1e18, t1 = 1e18;
            auto slab = [&](double p, double d) {
                if (std::abs(d) < 1e-12) {
                    if (p < -R || p > R) t0 = 1, t1 = 0;
                    return;
                }
                double u = (-R - p) / d, w = (R - p) / d;
                t0 = std::max(t0, std::min(u, w));
                t1 = std::min(t1, std::max(u, w));
            };
            slab(bx, dx);
            slab(by, dy);
            if (t0 >= t1) continue;
            std::snprintf(buf, sizeof buf,
                          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#444\" stroke-width=\"%s\"/>\n",
                          X(bx + t0 * dx), Y(by + t0 * dy), X(bx + t1 * dx), Y(by + t1 * dy), n == 0 ? "1.5" : "0.6");
            o << buf;
        }
    }
    o << "<text x=\"12\" y=\"494\" font-family=\"monospace\" font-size=\"12\">pi=" << cuts_str(r.pi)
      << " dist=" << r.dist << " |shadow|=" << r.shadow.size() << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace roller
