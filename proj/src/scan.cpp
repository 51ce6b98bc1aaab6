#include "pretzelkh/scan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

// Scanning engine: glue one crossing at a time into a complex living in the
// delooped cobordism category of the rank-2 Frobenius algebra
// A = Q[x]/(x^2 - t), t = 0 (plain) or 1 (deformed). After delooping and
// neck-cutting, a morphism between two loop-free matchings is a linear
// combination of dot patterns on the boundary cycles of the pair, so entries
// are tiny exact tables; isomorphism entries are cancelled eagerly and the
// complex stays near homology size throughout the scan.

namespace pkh {

namespace {

using Arcs = std::vector<std::pair<int, int>>;  // matching, each pair a <= b, sorted
using Mask = uint32_t;
using Cob = std::map<Mask, mpq_class>;  // dot bitmask over boundary cycles -> coefficient

struct Objc {
    Arcs arcs;
    std::vector<int> loops;  // representative internal point per un-delooped loop
    int ideg = 0;
    int q = 0;
    bool alive = false;
    std::map<int, Cob> out;  // target object -> entry
    std::set<int> in;        // sources with an entry into this object
};

// Boundary cycles of a source/target pair: point cycles (alternating
// source/target arcs) first, then source loops, then target loops.
struct PairCycles {
    int count = 0;
    std::map<int, int> of_point;
    int src_loop_base = 0, tgt_loop_base = 0;
};

PairCycles pair_cycles(const Arcs& src, const std::vector<int>& src_loops, const Arcs& tgt,
                       const std::vector<int>& tgt_loops) {
    PairCycles pc;
    std::map<int, int> s_partner, t_partner;
    for (auto& [a, b] : src) {
        s_partner[a] = b;
        s_partner[b] = a;
    }
    for (auto& [a, b] : tgt) {
        t_partner[a] = b;
        t_partner[b] = a;
    }
    for (auto& [p, sp] : s_partner) {
        if (pc.of_point.count(p)) continue;
        int id = pc.count++;
        int cur = p;
        bool on_src = true;
        do {
            pc.of_point[cur] = id;
            cur = on_src ? s_partner.at(cur) : t_partner.at(cur);
            pc.of_point[cur] = id;
            on_src = !on_src;
        } while (cur != p || !on_src);
    }
    pc.src_loop_base = pc.count;
    pc.count += static_cast<int>(src_loops.size());
    pc.tgt_loop_base = pc.count;
    pc.count += static_cast<int>(tgt_loops.size());
    if (pc.count > 30) throw std::length_error("scan: boundary cycle overflow");
    return pc;
}

// Union-find over surface atoms with Euler characteristic bookkeeping: every
// interval gluing lowers chi of the merged component by one.
struct Glue {
    std::vector<int> parent, chi;
    explicit Glue(const std::vector<int>& atom_chi) : chi(atom_chi) {
        parent.resize(chi.size());
        for (size_t k = 0; k < chi.size(); ++k) parent[k] = static_cast<int>(k);
    }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void glue(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            chi[a] -= 1;
        } else {
            parent[b] = a;
            chi[a] += chi[b] - 1;
        }
    }
};

// closed component with d dots and genus g: 2^g * eps(x^(d+g))
mpq_class closed_value(int chi, int d, int t) {
    int g2 = 2 - chi;
    if (g2 < 0 || g2 % 2) throw std::logic_error("scan: bad closed chi");
    int g = g2 / 2;
    int k = d + g;
    if (k % 2 == 0) return 0;
    mpq_class v = 1;
    for (int e = 0; e < g; ++e) v *= 2;
    if (t == 0 && k > 1) return 0;
    return v;  // t = 1 powers are 1; t = 0 survives only at k = 1
}

// iterated comultiplication of x^d over the component's boundary cycles,
// emitted as (cycle dot mask, coefficient) pairs
void neck_cut(const std::vector<int>& cyc, size_t idx, int d, mpq_class coeff, Mask acc, int t,
              std::vector<std::pair<Mask, mpq_class>>& out) {
    if (d >= 2) {
        if (t == 0) return;
        d = d % 2;  // x^2 = 1
    }
    if (idx + 1 == cyc.size()) {
        if (d) acc |= Mask(1) << cyc[idx];
        out.emplace_back(acc, coeff);
        return;
    }
    if (d == 0) {  // delta(1) = 1 (x) x + x (x) 1
        neck_cut(cyc, idx + 1, 1, coeff, acc, t, out);
        neck_cut(cyc, idx + 1, 0, coeff, acc | (Mask(1) << cyc[idx]), t, out);
    } else {  // delta(x) = x (x) x + t * 1 (x) 1
        neck_cut(cyc, idx + 1, 1, coeff, acc | (Mask(1) << cyc[idx]), t, out);
        if (t != 0) neck_cut(cyc, idx + 1, 0, coeff, acc, t, out);
    }
}

// Shared tail of every gluing operation: distribute each atom-dot assignment
// of the input over the merged components, evaluate closed components, and
// neck-cut open ones into the result-cycle dot basis.
struct Assembly {
    Glue glue;
    int n_atoms;
    // per merged component (by representative root): result cycles in it
    std::map<int, std::vector<int>> comp_cycles;

    Assembly(std::vector<int> atom_chi) : glue(std::move(atom_chi)), n_atoms(static_cast<int>(glue.chi.size())) {}

    void set_result_cycle(int cycle_index, int atom) { comp_cycles[glue.find(atom)].push_back(cycle_index); }

    void emit(const std::vector<int>& dots_per_atom, const mpq_class& coeff, int t, Cob& into) {
        std::vector<int> comp_dots(n_atoms, 0);
        std::vector<char> seen(n_atoms, 0);
        std::vector<int> roots;
        for (int a = 0; a < n_atoms; ++a) {
            int r = glue.find(a);
            comp_dots[r] += dots_per_atom[a];
            if (!seen[r]) {
                seen[r] = 1;
                roots.push_back(r);
            }
        }
        std::vector<std::pair<Mask, mpq_class>> acc{{0, coeff}};
        for (int r : roots) {
            auto it = comp_cycles.find(r);
            const int nc = (it == comp_cycles.end()) ? 0 : static_cast<int>(it->second.size());
            if (nc == 0) {
                mpq_class v = closed_value(glue.chi[r], comp_dots[r], t);
                if (v == 0) return;
                for (auto& [m, c] : acc) c *= v;
                continue;
            }
            int g2 = 2 - nc - glue.chi[r];
            if (g2 < 0 || g2 % 2) throw std::logic_error("scan: bad open chi");
            int g = g2 / 2;
            mpq_class mult = 1;
            for (int e = 0; e < g; ++e) mult *= 2;
            std::vector<std::pair<Mask, mpq_class>> parts;
            neck_cut(it->second, 0, comp_dots[r] + g, mult, 0, t, parts);
            if (parts.empty()) return;
            std::vector<std::pair<Mask, mpq_class>> next;
            next.reserve(acc.size() * parts.size());
            for (auto& [m1, c1] : acc)
                for (auto& [m2, c2] : parts) next.emplace_back(m1 | m2, c1 * c2);
            acc.swap(next);
        }
        for (auto& [m, c] : acc) {
            auto it = into.find(m);
            if (it == into.end()) {
                if (c != 0) into.emplace(m, c);
            } else {
                it->second += c;
                if (it->second == 0) into.erase(it);
            }
        }
    }
};

void add_scaled(Cob& into, const Cob& other, const mpq_class& scale) {
    for (auto& [m, c] : other) {
        mpq_class v = c * scale;
        auto it = into.find(m);
        if (it == into.end()) {
            if (v != 0) into.emplace(m, std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) into.erase(it);
        }
    }
}

struct Scanner {
    int t;  // 0 plain, 1 deformed
    std::vector<Objc> objs;
    std::vector<int> boundary;  // open edge ids, sorted

    explicit Scanner(int t_) : t(t_) {
        objs.emplace_back();
        objs[0].alive = true;
    }

    void link(int from, int to, Cob cob) {
        if (cob.empty()) return;
        auto it = objs[from].out.find(to);
        if (it == objs[from].out.end()) {
            objs[from].out.emplace(to, std::move(cob));
            objs[to].in.insert(from);
        } else {
            for (auto& [m, c] : cob) {
                auto jt = it->second.find(m);
                if (jt == it->second.end())
                    it->second.emplace(m, c);
                else {
                    jt->second += c;
                    if (jt->second == 0) it->second.erase(jt);
                }
            }
            if (it->second.empty()) unlink(from, to);
        }
    }

    void unlink(int from, int to) {
        objs[from].out.erase(to);
        objs[to].in.erase(from);
    }

    // composition of f: W -> M with g: M -> Z over loop-free objects
    Cob compose(const Objc& w, const Arcs& mid, const Cob& f, const Objc& z, const Cob& g) {
        auto cf = pair_cycles(w.arcs, {}, mid, {});
        auto cg = pair_cycles(mid, {}, z.arcs, {});
        auto cr = pair_cycles(w.arcs, {}, z.arcs, {});
        Assembly asm_(std::vector<int>(cf.count + cg.count, 1));
        for (auto& [a, b] : mid) asm_.glue.glue(cf.of_point.at(a), cf.count + cg.of_point.at(a));
        std::set<int> done;
        for (auto& [p, cyc] : cr.of_point)
            if (done.insert(cyc).second) asm_.set_result_cycle(cyc, cf.of_point.at(p));
        Cob out;
        std::vector<int> dots(cf.count + cg.count, 0);
        for (auto& [mf, vf] : f) {
            for (int k = 0; k < cf.count; ++k) dots[k] = (mf >> k) & 1;
            for (auto& [mg, vg] : g) {
                for (int k = 0; k < cg.count; ++k) dots[cf.count + k] = (mg >> k) & 1;
                asm_.emit(dots, vf * vg, t, out);
            }
        }
        return out;
    }

    // --- crossing attachment -------------------------------------------------

    struct Built {
        Arcs arcs;
        std::vector<int> loops;
    };

    // connect old arcs with the smoothing arcs, absorbing internal points
    static Built merge_arcs(const Arcs& old_arcs, const Arcs& add, const std::set<int>& internal) {
        // multigraph walk: internal points have degree 2, others degree 1
        std::map<int, std::vector<std::pair<int, int>>> at;  // point -> (arc id, end)
        Arcs all = old_arcs;
        all.insert(all.end(), add.begin(), add.end());
        for (size_t k = 0; k < all.size(); ++k) {
            at[all[k].first].push_back({static_cast<int>(k), 0});
            at[all[k].second].push_back({static_cast<int>(k), 1});
        }
        std::vector<char> used(all.size(), 0);
        Built out;
        auto walk = [&](int arc, int enter_end) {
            // consume arcs through internal points; -1 means the walk closed up
            int cur_arc = arc, cur_end = enter_end;
            while (true) {
                used[cur_arc] = 1;
                int p = cur_end == 0 ? all[cur_arc].second : all[cur_arc].first;
                if (!internal.count(p)) return p;
                int nxt = -1, nxt_end = -1;
                for (auto& [a2, e2] : at[p])
                    if (!used[a2]) {
                        nxt = a2;
                        nxt_end = e2;
                    }
                if (nxt < 0) return -1;  // closed up: loop
                cur_arc = nxt;
                cur_end = nxt_end;
            }
        };
        // paths start at the surviving boundary points
        for (auto& [pt, occ] : at) {
            if (internal.count(pt)) continue;
            for (auto& [a, e] : occ) {
                if (used[a]) continue;
                int far = walk(a, e);
                out.arcs.emplace_back(std::min(pt, far), std::max(pt, far));
            }
        }
        // leftovers are fully internal cycles
        for (size_t k = 0; k < all.size(); ++k) {
            if (used[k]) continue;
            walk(static_cast<int>(k), 0);
            out.loops.push_back(all[k].first);
        }
        std::sort(out.arcs.begin(), out.arcs.end());
        std::sort(out.loops.begin(), out.loops.end());
        return out;
    }

    // transformed entry: old cob between O and P, both sides extended by the
    // same smoothing (saddle = false), or the identity on O extended by the
    // saddle from smoothing 0 to smoothing 1 (saddle = true)
    Cob transform(const Objc& o, const Objc& p, const Cob& cob, bool saddle, const Arcs& arcs_src,
                  const Arcs& arcs_tgt, const std::set<int>& internal, const Built& bs,
                  const Built& bt) {
        auto co = pair_cycles(o.arcs, {}, p.arcs, {});
        // atoms: old boundary cycles, then one per smoothing arc (or one saddle)
        std::vector<int> chi(co.count, 1);
        std::map<int, std::vector<int>> new_at;  // point -> atoms (with multiplicity)
        int n_new = 0;
        if (saddle) {
            chi.push_back(1);
            n_new = 1;
            for (auto& [a, b] : arcs_src) {
                new_at[a].push_back(co.count);
                new_at[b].push_back(co.count);
            }
        } else {
            for (auto& [a, b] : arcs_src) {
                chi.push_back(a == b ? 0 : 1);  // degenerate arc: annulus
                new_at[a].push_back(co.count + n_new);
                new_at[b].push_back(co.count + n_new);
                ++n_new;
            }
        }
        Assembly asm_(chi);
        for (int pt : internal) {
            std::vector<int> occ;
            if (co.of_point.count(pt)) occ.push_back(co.of_point.at(pt));
            auto it = new_at.find(pt);
            if (it != new_at.end()) occ.insert(occ.end(), it->second.begin(), it->second.end());
            if (occ.size() != 2) throw std::logic_error("scan: internal point occurrence");
            asm_.glue.glue(occ[0], occ[1]);
        }
        auto atom_of_point = [&](int pt) {
            auto it = co.of_point.find(pt);
            if (it != co.of_point.end()) return it->second;
            return new_at.at(pt)[0];
        };
        auto cr = pair_cycles(bs.arcs, bs.loops, bt.arcs, bt.loops);
        std::set<int> done;
        for (auto& [pt, cyc] : cr.of_point)
            if (done.insert(cyc).second) asm_.set_result_cycle(cyc, atom_of_point(pt));
        for (size_t k = 0; k < bs.loops.size(); ++k)
            asm_.set_result_cycle(cr.src_loop_base + static_cast<int>(k), atom_of_point(bs.loops[k]));
        for (size_t k = 0; k < bt.loops.size(); ++k)
            asm_.set_result_cycle(cr.tgt_loop_base + static_cast<int>(k), atom_of_point(bt.loops[k]));
        Cob out;
        std::vector<int> dots(chi.size(), 0);
        for (auto& [m, v] : cob) {
            for (int k = 0; k < co.count; ++k) dots[k] = (m >> k) & 1;
            asm_.emit(dots, v, t, out);
        }
        return out;
    }

    void attach(const Crossing& cr) {
        const Arcs arcs0{{std::min(cr.edge[0], cr.edge[3]), std::max(cr.edge[0], cr.edge[3])},
                         {std::min(cr.edge[1], cr.edge[2]), std::max(cr.edge[1], cr.edge[2])}};
        const Arcs arcs1{{std::min(cr.edge[0], cr.edge[1]), std::max(cr.edge[0], cr.edge[1])},
                         {std::min(cr.edge[2], cr.edge[3]), std::max(cr.edge[2], cr.edge[3])}};
        std::map<int, int> occur;
        for (int e : boundary) occur[e] += 1;
        for (int s = 0; s < 4; ++s) occur[cr.edge[s]] += 1;
        std::set<int> internal;
        std::vector<int> nb;
        for (auto& [e, n] : occur) {
            if (n == 2)
                internal.insert(e);
            else
                nb.push_back(e);
        }

        std::vector<Objc> next;
        std::vector<std::array<int, 2>> idx(objs.size(), {-1, -1});
        std::vector<std::array<Built, 2>> built(objs.size());
        for (size_t k = 0; k < objs.size(); ++k) {
            if (!objs[k].alive) continue;
            for (int b = 0; b < 2; ++b) {
                built[k][b] = merge_arcs(objs[k].arcs, b ? arcs1 : arcs0, internal);
                Objc no;
                no.arcs = built[k][b].arcs;
                no.loops = built[k][b].loops;
                no.ideg = objs[k].ideg + b;
                no.q = objs[k].q + b;
                no.alive = true;
                idx[k][b] = static_cast<int>(next.size());
                next.push_back(std::move(no));
            }
        }
        for (size_t k = 0; k < objs.size(); ++k) {
            if (!objs[k].alive) continue;
            for (auto& [to, cob] : objs[k].out) {
                for (int b = 0; b < 2; ++b) {
                    Cob nc = transform(objs[k], objs[to], cob, false, b ? arcs1 : arcs0,
                                       b ? arcs1 : arcs0, internal, built[k][b], built[to][b]);
                    if (!nc.empty()) {
                        next[idx[k][b]].out.emplace(idx[to][b], std::move(nc));
                        next[idx[to][b]].in.insert(idx[k][b]);
                    }
                }
            }
            Cob id{{0, (objs[k].ideg % 2) ? mpq_class(-1) : mpq_class(1)}};
            Cob sad = transform(objs[k], objs[k], id, true, arcs0, arcs1, internal, built[k][0],
                                built[k][1]);
            if (!sad.empty()) {
                next[idx[k][0]].out.emplace(idx[k][1], std::move(sad));
                next[idx[k][1]].in.insert(idx[k][0]);
            }
        }
        objs.swap(next);
        boundary.swap(nb);
    }

    // --- delooping -----------------------------------------------------------

    // bit surgery: drop bit `pos`, shifting higher bits down
    static Mask drop_bit(Mask m, int pos) {
        Mask low = m & ((Mask(1) << pos) - 1);
        return low | ((m >> (pos + 1)) << pos);
    }

    void deloop_all() {
        for (size_t x = 0; x < objs.size(); ++x) {
            while (objs[x].alive && !objs[x].loops.empty()) deloop_one(static_cast<int>(x));
        }
    }

    void deloop_one(int x) {
        const Arcs x_arcs = objs[x].arcs;
        std::vector<int> rest(objs[x].loops.begin(), objs[x].loops.end() - 1);
        const int x_ideg = objs[x].ideg, x_q = objs[x].q;
        const int loop_slot = static_cast<int>(rest.size());  // index among own loops

        int i1 = static_cast<int>(objs.size());
        int i2 = i1 + 1;
        for (int v = 0; v < 2; ++v) {
            Objc no;
            no.arcs = x_arcs;
            no.loops = rest;
            no.ideg = x_ideg;
            no.q = x_q + (v == 0 ? 1 : -1);
            no.alive = true;
            objs.push_back(std::move(no));
        }
        auto in_list = std::vector<int>(objs[x].in.begin(), objs[x].in.end());
        auto out_list = objs[x].out;
        for (int w : in_list) {
            Cob f = objs[w].out.at(x);
            unlink(w, x);
            auto cf = pair_cycles(objs[w].arcs, objs[w].loops, objs[x].arcs, objs[x].loops);
            int pos = cf.tgt_loop_base + loop_slot;
            Cob f1, f2;  // target-dot 0 survives the dotted cap, 1 the plain cap
            for (auto& [m, c] : f) {
                if (m & (Mask(1) << pos))
                    f2[drop_bit(m, pos)] += c;
                else
                    f1[drop_bit(m, pos)] += c;
            }
            for (auto it = f1.begin(); it != f1.end();) it = (it->second == 0) ? f1.erase(it) : std::next(it);
            for (auto it = f2.begin(); it != f2.end();) it = (it->second == 0) ? f2.erase(it) : std::next(it);
            link(w, i1, std::move(f1));
            link(w, i2, std::move(f2));
        }
        for (auto& [z, g] : out_list) {
            unlink(x, z);
            auto cg = pair_cycles(objs[x].arcs, objs[x].loops, objs[z].arcs, objs[z].loops);
            int pos = cg.src_loop_base + loop_slot;
            Cob g1, g2;  // source-dot 1 survives the plain cup, 0 the dotted cup
            for (auto& [m, c] : g) {
                if (m & (Mask(1) << pos))
                    g1[drop_bit(m, pos)] += c;
                else
                    g2[drop_bit(m, pos)] += c;
            }
            for (auto it = g1.begin(); it != g1.end();) it = (it->second == 0) ? g1.erase(it) : std::next(it);
            for (auto it = g2.begin(); it != g2.end();) it = (it->second == 0) ? g2.erase(it) : std::next(it);
            link(i1, z, std::move(g1));
            link(i2, z, std::move(g2));
        }
        objs[x].alive = false;
        objs[x].out.clear();
        objs[x].in.clear();
    }

    // --- cancellation --------------------------------------------------------

    // pivot: entry between objects with equal matching and equal quantum
    // shift; by the filtration such an entry is a multiple of the identity
    bool cancel_round() {
        for (size_t x = 0; x < objs.size(); ++x) {
            if (!objs[x].alive) continue;
            for (auto& [y, cob] : objs[x].out) {
                if (objs[x].arcs != objs[static_cast<size_t>(y)].arcs ||
                    objs[x].q != objs[static_cast<size_t>(y)].q)
                    continue;
                if (cob.size() != 1 || cob.begin()->first != 0)
                    throw std::logic_error("scan: non-identity entry at filtration level 0");
                cancel(static_cast<int>(x), y, cob.begin()->second);
                return true;
            }
        }
        return false;
    }

    void cancel(int x, int y, mpq_class u) {
        const Arcs mid = objs[x].arcs;
        std::vector<int> ins(objs[y].in.begin(), objs[y].in.end());
        std::vector<std::pair<int, Cob>> outs(objs[x].out.begin(), objs[x].out.end());
        mpq_class s = -1 / u;
        for (int w : ins) {
            if (w == x) continue;
            Cob f = objs[w].out.at(y);
            for (auto& [z, g] : outs) {
                if (z == y) continue;
                Cob corr = compose(objs[w], mid, f, objs[z], g);
                if (!corr.empty()) {
                    Cob scaled;
                    add_scaled(scaled, corr, s);
                    link(w, z, std::move(scaled));
                }
            }
        }
        kill(x);
        kill(y);
    }

    void kill(int x) {
        for (auto& [z, g] : std::map<int, Cob>(objs[x].out)) unlink(x, z);
        for (int w : std::set<int>(objs[x].in)) unlink(w, x);
        objs[x].alive = false;
    }

    void reduce() {
        while (cancel_round()) {
        }
    }

    long long alive_count() const {
        long long n = 0;
        for (auto& o : objs) n += o.alive;
        return n;
    }

    void compact() {
        std::vector<Objc> next;
        std::vector<int> idx(objs.size(), -1);
        for (size_t k = 0; k < objs.size(); ++k) {
            if (!objs[k].alive) continue;
            idx[k] = static_cast<int>(next.size());
            Objc o;
            o.arcs = objs[k].arcs;
            o.loops = objs[k].loops;
            o.ideg = objs[k].ideg;
            o.q = objs[k].q;
            o.alive = true;
            next.push_back(std::move(o));
        }
        for (size_t k = 0; k < objs.size(); ++k) {
            if (!objs[k].alive) continue;
            for (auto& [to, cob] : objs[k].out) {
                next[idx[k]].out.emplace(idx[to], cob);
                next[idx[to]].in.insert(idx[k]);
            }
        }
        objs.swap(next);
    }
};

// crossing order keeping the open boundary small: greedily take the crossing
// sharing the most edges with the current boundary
std::vector<int> scan_order(const LinkDiagram& d) {
    const int n = d.crossing_count();
    std::vector<int> order;
    std::vector<char> used(n, 0);
    std::set<int> open;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_shared = -1;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            int shared = 0;
            for (int s = 0; s < 4; ++s) shared += open.count(d.crossings()[c].edge[s]);
            if (shared > best_shared) {
                best = c;
                best_shared = shared;
            }
        }
        used[best] = 1;
        order.push_back(best);
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings()[best].edge[s];
            if (!open.insert(e).second) open.erase(e);
        }
    }
    return order;
}

long long dense_rank(std::vector<std::vector<mpq_class>> a) {
    if (a.empty() || a[0].empty()) return 0;
    const size_t nr = a.size(), nc = a[0].size();
    long long rank = 0;
    size_t row = 0;
    for (size_t c = 0; c < nc && row < nr; ++c) {
        size_t pr = row;
        while (pr < nr && a[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(a[row], a[pr]);
        for (size_t i = row + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[row][c];
            for (size_t k = c; k < nc; ++k) a[i][k] -= f * a[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

ReducedComplex scan_reduce(const LinkDiagram& d, bool lee, int max_crossings) {
    if (d.crossing_count() > max_crossings) throw std::length_error("scan: crossing count exceeds limit");
    Scanner sc(lee ? 1 : 0);
    for (int c : scan_order(d)) {
        sc.attach(d.crossings()[c]);
        sc.deloop_all();
        sc.reduce();
        if (sc.alive_count() > 2000000) throw std::length_error("scan: complex blow-up");
        sc.compact();
    }
    if (!sc.boundary.empty()) throw std::logic_error("scan: open boundary after full scan");
    ReducedComplex out;
    out.free_loops = d.free_loop_count();
    const int di = -d.n_minus();
    const int dq = d.n_plus() - 2 * d.n_minus();
    std::vector<int> idx(sc.objs.size(), -1);
    for (size_t k = 0; k < sc.objs.size(); ++k) {
        if (!sc.objs[k].alive) continue;
        idx[k] = static_cast<int>(out.gens.size());
        out.gens.push_back({sc.objs[k].ideg + di, sc.objs[k].q + dq});
    }
    for (size_t k = 0; k < sc.objs.size(); ++k) {
        if (!sc.objs[k].alive) continue;
        for (auto& [to, cob] : sc.objs[k].out) {
            if (cob.empty()) continue;
            if (cob.size() != 1 || cob.begin()->first != 0)
                throw std::logic_error("scan: non-scalar entry on closed diagram");
            out.entries.emplace_back(idx[k], idx[to], cob.begin()->second);
        }
    }
    if (!lee && !out.entries.empty())
        throw std::logic_error("scan: uncancelled entry in the undeformed theory");
    return out;
}

BigradedDims homology_dims_scan(const LinkDiagram& d, int max_crossings) {
    auto rc = scan_reduce(d, false, max_crossings);
    BigradedDims dims;
    for (auto& g : rc.gens) dims.add(g.i, g.q, 1);
    for (int k = 0; k < rc.free_loops; ++k) {
        BigradedDims next;
        for (auto& [ij, r] : dims.ranks) {
            next.add(ij.first, ij.second - 1, r);
            next.add(ij.first, ij.second + 1, r);
        }
        dims = std::move(next);
    }
    return dims;
}

std::map<int, long long> lee_homology_rank_scan(const LinkDiagram& d, int max_crossings) {
    auto rc = scan_reduce(d, true, max_crossings);
    std::map<int, std::vector<int>> gens_at;  // i -> gen indices
    std::vector<int> pos(rc.gens.size());
    for (size_t k = 0; k < rc.gens.size(); ++k) {
        pos[k] = static_cast<int>(gens_at[rc.gens[k].i].size());
        gens_at[rc.gens[k].i].push_back(static_cast<int>(k));
    }
    std::map<int, long long> rank_d;  // i -> rank of d_i
    std::map<int, std::vector<std::vector<mpq_class>>> mats;
    for (auto& [from, to, c] : rc.entries) {
        int i = rc.gens[from].i;
        auto& m = mats[i];
        if (m.empty())
            m.assign(gens_at[i + 1].size(), std::vector<mpq_class>(gens_at[i].size(), 0));
        m[pos[to]][pos[from]] = c;
    }
    for (auto& [i, m] : mats) rank_d[i] = dense_rank(m);
    std::map<int, long long> out;
    for (auto& [i, gs] : gens_at) {
        long long h = static_cast<long long>(gs.size()) - rank_d[i] - rank_d[i - 1];
        if (h != 0) out[i] = h;
    }
    for (int k = 0; k < rc.free_loops; ++k)
        for (auto& [i, h] : out) h *= 2;
    return out;
}

SInvariantResult s_invariant_scan(const LinkDiagram& d, int max_crossings) {
    if (d.component_count() != 1) throw std::invalid_argument("s invariant: knot diagrams only");
    auto rc = scan_reduce(d, true, max_crossings);
    std::vector<int> g0, g1, gm1;  // reduced-generator indices per degree
    for (size_t k = 0; k < rc.gens.size(); ++k) {
        if (rc.gens[k].i == 0) g0.push_back(static_cast<int>(k));
        if (rc.gens[k].i == 1) g1.push_back(static_cast<int>(k));
        if (rc.gens[k].i == -1) gm1.push_back(static_cast<int>(k));
    }
    auto index_of = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::vector<std::vector<mpq_class>> d0(g1.size(), std::vector<mpq_class>(g0.size(), 0));
    std::vector<std::vector<mpq_class>> dm1(g0.size(), std::vector<mpq_class>(gm1.size(), 0));
    for (auto& [from, to, c] : rc.entries) {
        if (rc.gens[from].i == 0) d0[index_of(g1, to)][index_of(g0, from)] = c;
        if (rc.gens[from].i == -1) dm1[index_of(g0, to)][index_of(gm1, from)] = c;
    }
    const long long n0 = static_cast<long long>(g0.size());
    const long long rank_d0 = dense_rank(d0);
    const long long rank_dm1 = dense_rank(dm1);
    const long long lee_rank = n0 - rank_d0 - rank_dm1;
    if (lee_rank != 2) throw std::runtime_error("s invariant: degree-0 Lee rank is not 2");

    std::vector<int> q0;
    for (int g : g0) q0.push_back(rc.gens[g].q);
    auto r_of = [&](int j) {
        long long dim_f = 0;
        for (size_t c = 0; c < g0.size(); ++c)
            if (q0[c] >= j) ++dim_f;
        auto d0f = d0;
        for (size_t c = 0; c < g0.size(); ++c)
            if (q0[c] < j)
                for (auto& row : d0f) row[c] = 0;
        auto dm1b = dm1;
        for (size_t r = 0; r < g0.size(); ++r)
            if (q0[r] >= j)
                for (auto& v : dm1b[r]) v = 0;
        return dim_f - dense_rank(d0f) - rank_dm1 + dense_rank(dm1b);
    };
    std::vector<int> levels(q0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    SInvariantResult out;
    out.lee_rank = lee_rank;
    out.s_min = out.s_max = levels.front() - 1;
    for (int j : levels) {
        long long r = r_of(j);
        if (r >= 2) out.s_min = std::max(out.s_min, j);
        if (r >= 1) out.s_max = std::max(out.s_max, j);
    }
    if (out.s_max != out.s_min + 2)
        throw std::runtime_error("s invariant: filtration jump levels are not 2 apart");
    out.s = out.s_min + 1;
    return out;
}

}  // namespace pkh
