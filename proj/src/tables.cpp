#include "sla/tables.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace sla {

namespace {

Weight eps(const AlgebraPtr& g, size_t i, const Rat& c = Rat(1)) {
    return Weight::eps_unit(g->wm, g->wn, i, c);
}
Weight del(const AlgebraPtr& g, size_t j, const Rat& c = Rat(1)) {
    return Weight::del_unit(g->wm, g->wn, j, c);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

std::string scan_value(const Rep& r, const Config& cfg) {
    std::vector<std::string> classes;
    int sampled = 0;
    for (auto& [label, rep] : spherical_borel_scan(r, cfg)) {
        if (rep.spherical) classes.push_back(label);
        if (rep.sampled) ++sampled;
    }
    std::sort(classes.begin(), classes.end());
    std::string out = "sdim=" + r.sdim().str() + " spherical=[" + join(classes, ",") + "]";
    if (sampled) out += " sampled=" + std::to_string(sampled);
    return out;
}

std::string cr_value(const Rep& r, int dcap, size_t dim_cap) {
    std::string out = "cr=[";
    for (int d = 1; d <= dcap; ++d) {
        if (d > 1) out += ",";
        Rep slice = function_slice(r, d).rep;
        if (slice.dim() > dim_cap) {
            out += "-";
            continue;
        }
        out += is_completely_reducible(slice, dim_cap) ? "t" : "f";
    }
    return out + "]";
}

static std::string stab_value(const Rep& r, const Config& cfg) {
    for (auto& b : enumerate_borel_classes(r.g)) {
        auto rep = is_spherical(r, b, cfg);
        if (rep.spherical) {
            auto st = stabilizer(r, rep.witness);
            return "stab=" + st.sdim.str() + (st.bracket_closed ? "" : "!open");
        }
    }
    return "stab=none";
}

static std::string monoid_value(const Rep& r, const Borel& b, int cap,
                                const std::vector<Weight>& declared, const Config& cfg) {
    auto rep = weight_monoid(r, b, cap, declared, cfg);
    std::vector<std::string> ws;
    for (auto& row : rep.rows)
        if (row.non_nilpotent) ws.push_back(row.wt.str());
    std::sort(ws.begin(), ws.end());
    std::string out = "monoid={" + join(ws, ",") + "}";
    out += rep.multiplicity_free ? " multfree" : " MULT";
    out += rep.closed ? " closed" : " NOTCLOSED";
    if (!declared.empty()) out += rep.matches_declared ? " matches" : " DIFFERS";
    return out;
}

static std::string candidates_value(const std::vector<CandidateWeight>& cands) {
    std::vector<std::string> ws;
    bool redirect = false;
    for (auto& c : cands) {
        std::string s = c.wt.str();
        for (auto& t : c.excluded_t) s += " (t!=" + t.get_str() + ")";
        ws.push_back(s);
        redirect = redirect || c.osp24_redirect;
    }
    std::sort(ws.begin(), ws.end());
    std::string out = "candidates=[" + join(ws, "; ") + "]";
    if (redirect) out += " redirect=osp(2|4)";
    return out;
}

std::vector<std::string> table_ids() {
    return {"intro-families", "gl12", "osp-irreducibles", "p3-nabla", "q-family", "exceptional",
            "appendix-b"};
}

namespace {

struct RowTask {
    std::string key, note;
    std::function<std::string()> compute;
    std::vector<std::string> flags;
};

TableReport run_tasks(const std::string& id, std::vector<RowTask>& tasks, const Config& cfg) {
    TableReport rep;
    rep.table_id = id;
    size_t jobs = std::max(1, cfg.jobs);
    std::vector<std::string> values(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) values[i] = tasks[i].compute();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                values[i] = tasks[i].compute();
            }
        };
        std::vector<std::thread> pool;
        for (size_t t = 0; t < std::min(jobs, tasks.size()); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < tasks.size(); ++i)
        rep.rows.push_back({tasks[i].key, tasks[i].note, values[i], tasks[i].flags});
    std::sort(rep.rows.begin(), rep.rows.end(),
              [](const TableRow& a, const TableRow& b) { return a.key < b.key; });
    return rep;
}

std::vector<std::pair<int, int>> grid() {
    return {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
}

std::vector<Rat> t_samples() { return {rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1), rat(2)}; }

TableReport table_intro(const Config& cfg) {
    std::vector<RowTask> tasks;
    auto add = [&](const std::string& key, const std::string& note, std::function<std::string()> f) {
        tasks.push_back({key, note, std::move(f), {}});
    };
    for (auto [m, n] : grid()) {
        add("gl:" + std::to_string(m) + "|" + std::to_string(n) + ":std",
            "standard module of gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", [=]() {
                auto g = build_algebra(Kind::gl, m, n);
                Rep v = standard_module(g);
                return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
            });
        add("gl:" + std::to_string(m) + "|" + std::to_string(n) + ":sym2",
            "second symmetric power of the gl standard module", [=]() {
                auto g = build_algebra(Kind::gl, m, n);
                Rep v = sym_power(standard_module(g), 2);
                return scan_value(v, cfg) + " " + cr_value(dual(v), 2, 50);
            });
        if (n == m || n == m + 1)
            add("gl:" + std::to_string(m) + "|" + std::to_string(n) + ":pisym2",
                "parity-shifted second symmetric power", [=]() {
                    auto g = build_algebra(Kind::gl, m, n);
                    Rep v = parity_shift(sym_power(standard_module(g), 2));
                    return scan_value(v, cfg) + " " + cr_value(dual(v), 2, 50);
                });
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {2, 2}, {4, 1}, {5, 1}}) {
        std::string mn = std::to_string(m) + "|" + std::to_string(2 * n);
        add("osp:" + mn + ":std", "standard module of osp(" + mn + ")", [=]() {
            auto g = build_algebra(Kind::osp, m, n);
            Rep v = standard_module(g);
            return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
        });
        add("osp:" + mn + ":pi", "parity-shifted osp standard module", [=]() {
            auto g = build_algebra(Kind::osp, m, n);
            Rep v = parity_shift(standard_module(g));
            return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
        });
    }
    for (int n : {1, 2, 3}) {
        add("q:" + std::to_string(n) + ":std", "standard module of q(" + std::to_string(n) + ")",
            [=]() {
                auto g = build_algebra(Kind::q, n);
                Rep v = standard_module(g);
                return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
            });
        add("p:" + std::to_string(n) + ":std", "standard module of p(" + std::to_string(n) + ")",
            [=]() {
                auto g = build_algebra(Kind::p, n);
                return scan_value(standard_module(g), cfg);
            });
        add("p:" + std::to_string(n) + ":pi", "parity-shifted p standard module", [=]() {
            auto g = build_algebra(Kind::p, n);
            Rep v = parity_shift(standard_module(g));
            return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
        });
    }
    add("u11", "the (1|1)-dimensional odd module", [=]() {
        Rep v = u11_module();
        return scan_value(v, cfg) + " " + cr_value(dual(v), 3, 50);
    });
    return run_tasks("intro-families", tasks, cfg);
}

TableReport table_gl12(const Config& cfg) {
    std::vector<RowTask> tasks;
    for (auto& t : t_samples()) {
        tasks.push_back({"kac:t=" + t.get_str(), "gl(1|2) Kac module at t = " + t.get_str(), [=]() {
                             auto g = build_algebra(Kind::gl, 1, 2);
                             Rep k = kac_module_typeI(g, eps(g, 0, t)).rep;
                             return scan_value(k, cfg) + " " + stab_value(k, cfg) + " " +
                                    cr_value(k, 4, 60);
                         },
                         {}});
        if (t != 0)
            tasks.push_back({"pikac:t=" + t.get_str(),
                             "parity-shifted gl(1|2) Kac module at t = " + t.get_str(), [=]() {
                                 auto g = build_algebra(Kind::gl, 1, 2);
                                 Rep k = parity_shift(kac_module_typeI(g, eps(g, 0, t)).rep);
                                 return scan_value(k, cfg) + " " + stab_value(k, cfg) + " " +
                                        cr_value(k, 3, 60);
                             },
                             {}});
    }
    return run_tasks("gl12", tasks, cfg);
}

TableReport table_osp(const Config& cfg) {
    std::vector<RowTask> tasks;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {4, 2}, {5, 1}, {1, 2}}) {
        std::string mn = std::to_string(m) + "|" + std::to_string(2 * n);
        tasks.push_back({"osp:" + mn + ":std", "osp(" + mn + ") standard module", [=]() {
                             auto g = build_algebra(Kind::osp, m, n);
                             Rep v = standard_module(g);
                             std::string s = scan_value(v, cfg);
                             if (m >= 2) s += " " + stab_value(v, cfg);
                             return s;
                         },
                         {}});
        tasks.push_back({"osp:" + mn + ":pi", "parity-shifted osp(" + mn + ") standard module",
                         [=]() {
                             auto g = build_algebra(Kind::osp, m, n);
                             Rep v = parity_shift(standard_module(g));
                             return scan_value(v, cfg) + " " + stab_value(v, cfg);
                         },
                         {}});
    }
    tasks.push_back({"osp:2|4:exc", "irreducible osp(2|4)-module of highest weight d1+d2-e1",
                     [=]() {
                         auto g = build_algebra(Kind::osp, 2, 2);
                         Rep l = irreducible_quotient(
                             kac_module_typeI(g, del(g, 0) + del(g, 1) + eps(g, 0, Rat(-1))));
                         return scan_value(l, cfg) + " " + stab_value(l, cfg) + " " +
                                cr_value(l, 2, 40);
                     },
                     {}});
    return run_tasks("osp-irreducibles", tasks, cfg);
}

TableReport table_p3(const Config& cfg) {
    std::vector<RowTask> tasks;
    tasks.push_back({"nabla", "thin Kac module of p(3) on the omega character", [=]() {
                         auto hw = thin_kac_p(3, +1);
                         std::string s = scan_value(hw.rep, cfg);
                         std::mt19937_64 rng(cfg.seed);
                         auto g = hw.rep.g;
                         Borel b = borel_from_coweight(g, {Rat(3), Rat(2), Rat(1)});
                         auto layers = socle_filtration(hw.rep, b, rng);
                         std::vector<std::string> ls;
                         for (auto& l : layers) ls.push_back(l.str());
                         return s + " socle=[" + join(ls, ",") + "]";
                     },
                     {}});
    tasks.push_back({"rad-nabla", "radical of the thin Kac module", [=]() {
                         auto hw = thin_kac_p(3, +1);
                         Rep r = sub_rep(hw.rep, radical_of_hw_module(hw));
                         return scan_value(r, cfg);
                     },
                     {}});
    tasks.push_back({"nabla-mod-soc", "quotient of the thin Kac module by its socle", [=]() {
                         auto hw = thin_kac_p(3, +1);
                         std::mt19937_64 rng(cfg.seed);
                         auto g = hw.rep.g;
                         Borel b = borel_from_coweight(g, {Rat(3), Rat(2), Rat(1)});
                         Rep q = quotient_rep(hw.rep, socle_basis(hw.rep, b, rng));
                         return scan_value(q, cfg);
                     },
                     {}});
    return run_tasks("p3-nabla", tasks, cfg);
}

TableReport table_qfam(const Config& cfg) {
    std::vector<RowTask> tasks;
    for (auto& t : t_samples()) {
        for (bool pi : {false, true}) {
            std::string key = std::string(pi ? "pi-" : "") + "family:t=" + t.get_str();
            tasks.push_back({key, "q(2) family member at t = " + t.get_str(), [=]() {
                                 auto g = build_algebra(Kind::q, 2);
                                 Weight lam = eps(g, 0, t + 1) + eps(g, 1, t);
                                 Rep l = irreducible_quotient(
                                     truncated_verma(g, standard_borel(g), lam, 3));
                                 if (pi) l = parity_shift(l);
                                 return scan_value(l, cfg) + " " + stab_value(l, cfg) + " " +
                                        cr_value(l, 3, 60);
                             },
                             {}});
        }
    }
    for (int n : {2, 3})
        tasks.push_back({"q" + std::to_string(n) + ":std", "q(n) standard module", [=]() {
                             auto g = build_algebra(Kind::q, n);
                             Rep v = standard_module(g);
                             return scan_value(v, cfg) + " " + stab_value(v, cfg);
                         },
                         {}});
    return run_tasks("q-family", tasks, cfg);
}

TableReport table_exceptional(const Config& cfg) {
    std::vector<RowTask> tasks;
    auto add = [&](const std::string& key, const std::string& note, ExcKind kind, const Rat& a) {
        for (Parity p : {Parity::even, Parity::odd}) {
            std::string k = key + (p == Parity::even ? ":even" : ":odd");
            tasks.push_back({k, note, [=]() {
                                 auto rd = exceptional_root_datum(kind, a);
                                 return candidates_value(candidate_weights(rd, p, 3, cfg));
                             },
                             {}});
        }
    };
    add("g12", "candidate weights for G(1,2)", ExcKind::G12, Rat(1));
    add("f13", "candidate weights for F(1,3)", ExcKind::F13, Rat(1));
    for (auto& a : {rat(1, 3), rat(2), rat(5), rat(1), rat(-2)})
        add("d21a:a=" + a.get_str(), "candidate weights for D(2,1;a) at a = " + a.get_str(),
            ExcKind::D21a, a);
    return run_tasks("exceptional", tasks, cfg);
}

TableReport table_appendix_b(const Config& cfg) {
    std::vector<RowTask> tasks;
    int D = cfg.degree_cap;
    auto wz = [](Weight w, long z) {
        w.zeta = z;
        return w;
    };
    tasks.push_back({"gl:2|2:std", "functions on the gl(2|2) standard module, delta-first Borel",
                     [=]() {
                         auto g = build_algebra(Kind::gl, 2, 2);
                         Borel b = borel_from_sequence(g, "ddee");
                         // the printed generator -delta_n + zeta disagrees with the
                         // computed singular weight -eps_m + zeta
                         std::string computed = monoid_value(standard_module(g), b, D,
                                                             {wz(eps(g, 1, Rat(-1)), 1)}, cfg);
                         auto printed = weight_monoid(standard_module(g), b, D,
                                                      {wz(del(g, 1, Rat(-1)), 1)}, cfg);
                         return computed + (printed.matches_declared ? "" : " printed-row-differs");
                     },
                     {"known-discrepancy"}});
    tasks.push_back({"osp:3|2:std", "functions on the osp(3|2) standard module", [=]() {
                         auto g = build_algebra(Kind::osp, 3, 1);
                         Borel b = borel_from_sequence(g, "ed");
                         return monoid_value(standard_module(g), b, D,
                                             {wz(eps(g, 0), 1), wz(g->zero_weight(), 2)}, cfg);
                     },
                     {}});
    tasks.push_back({"osp:3|2:pi", "functions on the parity-shifted osp(3|2) standard module",
                     [=]() {
                         auto g = build_algebra(Kind::osp, 3, 1);
                         Borel b = borel_from_sequence(g, "de");
                         return monoid_value(parity_shift(standard_module(g)), b, D,
                                             {wz(del(g, 0), 1)}, cfg);
                     },
                     {}});
    tasks.push_back({"gl12:kac:t=1/2", "functions on the gl(1|2) Kac module at t = 1/2", [=]() {
                         auto g = build_algebra(Kind::gl, 1, 2);
                         Borel b = borel_from_sequence(g, "edd");
                         Rep k = kac_module_typeI(g, eps(g, 0, rat(1, 2))).rep;
                         std::vector<Weight> gens;
                         for (int j = 0; j + 1 <= D; ++j)
                             gens.push_back(wz(eps(g, 0, Rat(2) - Rat(j + 1) * rat(1, 2)) -
                                                   del(g, 0) - del(g, 1),
                                               j + 1));
                         return monoid_value(k, b, D, gens, cfg);
                     },
                     {}});
    tasks.push_back({"gl12:pikac:t=1/2",
                     "functions on the shifted gl(1|2) Kac module at t = 1/2", [=]() {
                         auto g = build_algebra(Kind::gl, 1, 2);
                         Borel b = borel_from_sequence(g, "ded");
                         Rep k = parity_shift(kac_module_typeI(g, eps(g, 0, rat(1, 2))).rep);
                         return monoid_value(k, b, D, {wz(eps(g, 0, rat(1, 2)) - del(g, 1), 1)},
                                             cfg);
                     },
                     {}});
    tasks.push_back({"osp24:exc", "functions on the exceptional osp(2|4) module", [=]() {
                         auto g = build_algebra(Kind::osp, 2, 2);
                         Borel b = borel_from_sequence(g, "(-e)dd");
                         Rep l = irreducible_quotient(
                             kac_module_typeI(g, del(g, 0) + del(g, 1) + eps(g, 0, Rat(-1))));
                         std::vector<Weight> gens{wz(eps(g, 0) + del(g, 0) + del(g, 1), 1),
                                                  wz(eps(g, 0, Rat(2)), 2)};
                         for (long s = 2; s <= D; ++s)
                             gens.push_back(wz(eps(g, 0, Rat(3 * s - 4)), s));
                         return monoid_value(l, b, D, gens, cfg);
                     },
                     {}});
    for (int n : {2, 3})
        tasks.push_back({"q" + std::to_string(n) + ":std",
                         "functions on the q(n) standard module", [=]() {
                             auto g = build_algebra(Kind::q, n);
                             return monoid_value(standard_module(g), standard_borel(g), D,
                                                 {wz(eps(g, g->wm - 1, Rat(-1)), 1)}, cfg);
                         },
                         {}});
    for (int n : {2, 3})
        tasks.push_back({"p" + std::to_string(n) + ":pi",
                         "functions on the shifted p(n) standard module", [=]() {
                             auto g = build_algebra(Kind::p, n);
                             std::vector<Rat> h;
                             for (int i = 0; i < n; ++i) h.push_back(Rat(n + 1 - i));
                             Borel b = borel_from_coweight(g, h);
                             return monoid_value(parity_shift(standard_module(g)), b, D,
                                                 {wz(eps(g, 0), 1)}, cfg);
                         },
                         {}});
    tasks.push_back({"p3:nabla", "functions on the thin Kac module of p(3)", [=]() {
                         auto hw = thin_kac_p(3, +1);
                         auto g = hw.rep.g;
                         Borel b = borel_from_coweight(g, {Rat(4), Rat(1), Rat(-2)});
                         Weight mo = g->zero_weight();
                         for (size_t i = 0; i < g->wm; ++i) mo.eps[i] = Lin(-1);
                         return monoid_value(hw.rep, b, D, {wz(eps(g, 0), 1), wz(mo, 1)}, cfg);
                     },
                     {}});
    for (auto& t : std::vector<Rat>{rat(0), rat(1)})
        tasks.push_back({"q2:family:t=" + t.get_str(),
                         "functions on the q(2) family member at t = " + t.get_str(), [=]() {
                             auto g = build_algebra(Kind::q, 2);
                             Weight lam = eps(g, 0, t + 1) + eps(g, 1, t);
                             Rep l = irreducible_quotient(
                                 truncated_verma(g, standard_borel(g), lam, 3));
                             Borel op = opposite_borel(standard_borel(g));
                             return monoid_value(l, op, D,
                                                 {wz(eps(g, 0, -(t + 1)) + eps(g, 1, -t), 1)}, cfg);
                         },
                         {}});
    return run_tasks("appendix-b", tasks, cfg);
}

}  // namespace

TableReport compute_table(const std::string& table_id, const Config& cfg) {
    if (table_id == "intro-families") return table_intro(cfg);
    if (table_id == "gl12") return table_gl12(cfg);
    if (table_id == "osp-irreducibles") return table_osp(cfg);
    if (table_id == "p3-nabla") return table_p3(cfg);
    if (table_id == "q-family") return table_qfam(cfg);
    if (table_id == "exceptional") return table_exceptional(cfg);
    if (table_id == "appendix-b") return table_appendix_b(cfg);
    throw std::invalid_argument("unknown table: " + table_id);
}

AlgebraSpec parse_algebra(const std::string& name, int m, int n, const std::string& alpha) {
    AlgebraSpec s;
    if (name == "gl") {
        s.kind = Kind::gl;
        s.m = m;
        s.n = n;
    } else if (name == "osp") {
        s.kind = Kind::osp;
        s.m = m;
        s.n = n;
    } else if (name == "p" || name == "q") {
        s.kind = name == "p" ? Kind::p : Kind::q;
        s.n = n ? n : m;
    } else if (name == "g12" || name == "f13" || name == "d21a") {
        s.exceptional = true;
        s.exc = name == "g12" ? ExcKind::G12 : name == "f13" ? ExcKind::F13 : ExcKind::D21a;
        s.alpha = alpha.empty() ? rat(1, 3) : rat_from_string(alpha);
    } else {
        throw std::invalid_argument("unknown algebra: " + name);
    }
    return s;
}

Weight parse_weight(const AlgebraPtr& g, const std::string& text) {
    Weight w = g->zero_weight();
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, ';')) {
        if (block.empty()) continue;
        if (block.size() < 2 || block[1] != ':')
            throw std::invalid_argument("bad weight literal: " + text);
        char tag = block[0];
        std::stringstream cs(block.substr(2));
        std::string num;
        size_t i = 0;
        while (std::getline(cs, num, ',')) {
            Rat c = rat_from_string(num);
            if (tag == 'e') {
                if (i >= g->wm) throw std::invalid_argument("too many eps coordinates");
                w.eps[i++] = Lin(c);
            } else if (tag == 'd') {
                if (i >= g->wn) throw std::invalid_argument("too many delta coordinates");
                w.del[i++] = Lin(c);
            } else {
                throw std::invalid_argument("bad weight block tag: " + block);
            }
        }
    }
    return w;
}

Rep build_module(const AlgebraPtr& g, const std::string& spec, const Config& cfg) {
    if (spec == "std") return standard_module(g);
    if (spec == "triv") return trivial_module(g);
    if (spec == "u11") return u11_module();
    if (spec.rfind("pi:", 0) == 0) return parity_shift(build_module(g, spec.substr(3), cfg));
    if (spec.rfind("dual:", 0) == 0) return dual(build_module(g, spec.substr(5), cfg));
    if (spec.rfind("sym", 0) == 0) {
        size_t colon = spec.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad module spec: " + spec);
        int k = std::stoi(spec.substr(3, colon - 3));
        return sym_power(build_module(g, spec.substr(colon + 1), cfg), k);
    }
    if (spec.rfind("alt:", 0) == 0) {
        size_t colon = spec.find(':', 4);
        if (colon == std::string::npos) throw std::invalid_argument("bad module spec: " + spec);
        int k = std::stoi(spec.substr(4, colon - 4));
        return alt_power(build_module(g, spec.substr(colon + 1), cfg), k);
    }
    if (spec.rfind("kac:t=", 0) == 0) {
        Rat t = rat_from_string(spec.substr(6));
        return kac_module_typeI(g, Weight::eps_unit(g->wm, g->wn, 0, t)).rep;
    }
    if (spec.rfind("kac:", 0) == 0)
        return kac_module_typeI(g, parse_weight(g, spec.substr(4))).rep;
    if (spec == "thin-kac:w") {
        if (g->kind != Kind::p) throw std::invalid_argument("thin Kac modules require p(n)");
        return thin_kac_p(g->n, +1).rep;
    }
    if (spec == "thick-kac:w") {
        if (g->kind != Kind::p) throw std::invalid_argument("thick Kac modules require p(n)");
        return thin_kac_p(g->n, -1).rep;
    }
    if (spec.rfind("family:t=", 0) == 0) {
        if (g->kind != Kind::q || g->n != 2)
            throw std::invalid_argument("the parametric family lives over q(2)");
        Rat t = rat_from_string(spec.substr(9));
        Weight lam = Weight::eps_unit(2, 0, 0, t + 1) + Weight::eps_unit(2, 0, 1, t);
        return irreducible_quotient(truncated_verma(g, standard_borel(g), lam, 3));
    }
    if (spec.rfind("irr:", 0) == 0) {
        Weight lam = parse_weight(g, spec.substr(4));
        int depth = default_depth(g, lam);
        return irreducible_quotient(truncated_verma(g, standard_borel(g), lam, depth));
    }
    throw std::invalid_argument("bad module spec: " + spec);
}

}  // namespace sla
