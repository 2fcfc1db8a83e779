#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "stlab/stlab.hpp"

using namespace stlab;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 1;
    bool pretty = false;
};

void emit(const Options& o, const json& j) { std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n"; }

Ring ring_arg(const std::string& s) { return s == "int" ? integers() : parse_ring(s); }

SystemPtr system_arg(const std::string& type, int rank) {
    if (type != "A" && type != "D") throw Usage("type must be A or D");
    return RootSystem::build(type == "A" ? RootType::A : RootType::D, rank);
}

// ---------------------------------------------------------------------------

int cmd_roots(const Options& o, const std::string& type, int rank, bool constants) {
    SystemPtr S = system_arg(type, rank);
    if (o.pretty) std::cout << S->name() << ": " << S->size() << " roots\n";
    if (!constants) {
        std::cout << "index\troot\tcoords\n";
        for (RootIndex i = 0; i < static_cast<RootIndex>(S->size()); ++i) {
            std::ostringstream c;
            for (std::size_t k = 0; k < S->coords(i).size(); ++k) c << (k ? "," : "") << S->coords(i)[k];
            std::cout << i << "\t" << S->root_str(i) << "\t" << c.str() << "\n";
        }
        return 0;
    }
    std::cout << "alpha\tbeta\talpha+beta\tN\n";
    for (const auto& r : constants_table(*S)) {
        if (r.alpha > r.beta) continue;
        std::cout << S->root_str(r.alpha) << "\t" << S->root_str(r.beta) << "\t" << S->root_str(r.sum) << "\t"
                  << (r.N > 0 ? "+1" : "-1") << "\n";
    }
    return 0;
}

int cmd_eval(const Options& o, const std::string& path, const std::string& rep_name, bool check_identity) {
    SteinbergWord w = word_from_json(read_json_file(path));
    RepPtr rep = Representation::make(Representation::parse_kind(rep_name), w.system());
    GroupMatrix m = evaluate(w, *rep);
    bool id = is_identity(m);
    if (o.pretty)
        std::cout << matrix_str(m);
    else
        emit(o, {{"representation", rep->name()}, {"ring", w.ring().str()}, {"identity", id}, {"matrix", matrix_to_json(m)}});
    return check_identity && !id ? 1 : 0;
}

int cmd_word_reduce(const Options& o, const std::string& path) {
    SteinbergWord w = word_from_json(read_json_file(path));
    SteinbergWord r = commutator_reduce(w);
    bool same = rep_equal(w, r, RepKind::adjoint);
    emit(o, {{"word", word_to_json(r)}, {"letters_before", w.size()}, {"letters_after", r.size()}, {"adjoint_equal", same}});
    return same ? 0 : 1;
}

int cmd_word_symbol(const Options& o, const std::string& sys, const std::string& ring, const std::string& root,
                    const std::string& u, const std::string& v) {
    SystemPtr S = RootSystem::parse(sys);
    Ring R = ring_arg(ring);
    RootIndex a = S->parse_root(root);
    SteinbergWord w = symbol(S, a, parse_elem(R, u), parse_elem(R, v));
    bool in_k2 = k2_membership(w);
    json out{{"word", word_to_json(w)}, {"k2_membership", in_k2}};
    if (R.is_field()) out["milnor"] = symbol_normalize(steinberg_to_milnor(w, a)).str();
    emit(o, out);
    return in_k2 ? 0 : 1;
}

MilnorSymbolSum symbols_arg(const std::vector<std::string>& specs) {
    Ring Q = rationals();
    MilnorSymbolSum s(Q);
    for (const auto& spec : specs) {
        auto parts = detail::split_top(spec);
        if (parts.size() != 2 && parts.size() != 3) throw Usage("symbol must be \"a,b\" or \"a,b,mult\": " + spec);
        long mult = parts.size() == 3 ? std::stol(parts[2]) : 1;
        s.add(parse_elem(Q, parts[0]), parse_elem(Q, parts[1]), mult);
    }
    return s;
}

int cmd_k2m_tame(const Options& o, const std::vector<std::string>& specs, const std::string& prime, const std::string& batch) {
    if (!batch.empty()) {
        json out = json::array();
        for (const auto& item : read_json_file(batch)) {
            std::vector<std::string> ss;
            const json& sym = item.at("symbol");
            if (sym.is_string())
                ss.push_back(sym.get<std::string>());
            else
                for (const auto& x : sym) ss.push_back(x.get<std::string>());
            BigInt p(item.at("prime").is_string() ? item.at("prime").get<std::string>() : std::to_string(item.at("prime").get<long>()));
            out.push_back({{"symbol", sym}, {"prime", p.get_str()}, {"residue", tame_symbol(symbols_arg(ss), p).get_str()}});
        }
        emit(o, out);
        return 0;
    }
    if (specs.empty() || prime.empty()) throw Usage("k2m tame needs --symbol and --prime, or --batch");
    std::cout << tame_symbol(symbols_arg(specs), BigInt(prime)).get_str() << "\n";
    return 0;
}

int cmd_k2m_normalize(const Options& o, const std::vector<std::string>& specs) {
    if (specs.empty()) throw Usage("k2m normalize needs --symbol");
    MilnorSymbolSum s = symbols_arg(specs);
    MilnorSymbolSum n = symbol_normalize(s);
    if (o.pretty) {
        std::cout << s.str() << " = " << n.str() << "\n";
        return 0;
    }
    json tame = json::object();
    for (const auto& p : relevant_primes(s)) tame[p.get_str()] = tame_symbol(s, p).get_str();
    emit(o, {{"input", s.str()}, {"normalized", n.str()}, {"tame", tame}});
    return 0;
}

int cmd_simplicial_check(const Options& o, int nmax, const std::string& ring) {
    IdentityReport r = simplicial_identity_check(ring_arg(ring), nmax);
    emit(o, {{"check", "simplicial_identities"}, {"ring", ring_arg(ring).str()}, {"samples", r.checked},
             {"failures", r.failed}, {"notes", r.failures}});
    return r.ok() ? 0 : 1;
}

int cmd_simplicial_lift(const Options& o, const std::string& path) {
    SteinbergWord w = word_from_json(read_json_file(path));
    MooreGenerator2 m = moore_lift(w);
    const Ring& R = w.ring().base();
    json faces = json::array();
    bool ok = true;
    for (int i = 0; i <= 2; ++i) {
        SteinbergWord f = substitute(m.word, face(R, i, 2));
        bool expect = i == 0 ? rep_equal(f, w, RepKind::adjoint) : k2_membership(f) && commutator_reduce(f).empty();
        ok = ok && expect;
        faces.push_back({{"face", i}, {"word", word_to_json(f)}, {"ok", expect}});
    }
    emit(o, {{"lift", word_to_json(m.word)}, {"faces", faces}});
    return ok ? 0 : 1;
}

PatchDatum datum_arg(const std::string& B, const std::string& a, const std::string& b, bool identity) {
    Ring R = ring_arg(B);
    if (identity) return PatchDatum::identity(R, parse_elem(R, b));
    return PatchDatum::zariski(R, parse_elem(R, a), parse_elem(R, b));
}

int cmd_patch_demo(const Options& o, const PatchDatum& d, const std::string& phi, const std::string& word,
                   const std::string& cert) {
    SystemPtr S = RootSystem::parse(phi);
    SteinbergWord x = word_from_json(read_json_file(word), S, d.A());
    if (x.ring() != d.A()) x = change_ring(x, d.A());
    SteinbergWord g = cert.empty() ? change_ring(x, d.Ah()) : word_from_json(read_json_file(cert), S, d.Ah());
    GlueResult r = glueing_demo(d, x, g);
    bool ok = r.orbit_ok && r.iota_ok && r.lambda_ok;
    emit(o, {{"check", "glueing"},
             {"datum", d.str()},
             {"preimage", word_to_json(r.y)},
             {"method", r.method},
             {"orbit", {{"u", word_to_json(r.orbit.u)}, {"v", word_to_json(r.orbit.v)}}},
             {"orbit_ok", r.orbit_ok},
             {"iota_ok", r.iota_ok},
             {"lambda_ok", r.lambda_ok},
             {"failures", ok ? 0 : 1}});
    return ok ? 0 : 1;
}

int cmd_patch_verify(const Options& o, const PatchDatum& d, const std::string& phi, long samples) {
    TReport r = verify_T_relations(d, RootSystem::parse(phi), samples, o.seed);
    emit(o, {{"check", "T_relations"},
             {"datum", d.str()},
             {"system", phi},
             {"samples", r.samples},
             {"R1", r.r1},
             {"R2", r.r2},
             {"R3", r.r3},
             {"independence", r.independence},
             {"equivariance", r.equivariance},
             {"additional", r.additional},
             {"star", r.star},
             {"failures", r.failures},
             {"notes", r.notes}});
    return r.ok() ? 0 : 1;
}

int cmd_milnor_square(const Options& o, const std::string& ring, const std::string& a, const std::string& x,
                      const std::string& g) {
    Ring R = ring_arg(ring);
    Ring M = milnor_ring(R, parse_elem(R, a));
    Elem m = milnor_square_pullback(M, parse_elem(R, x), parse_elem(M.series(), g));
    auto [px, pg] = milnor_square_projections(m);
    bool ok = px == parse_elem(R, x) && pg == parse_elem(M.series(), g);
    emit(o, {{"ring", M.str()}, {"element", elem_to_json(m)}, {"projections", {px.str(), pg.str()}}, {"round_trip", ok}});
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_selftest(const Options& o, bool quick) {
    const long n = quick ? 5 : 40;
    Rng64 g(o.seed);
    int failed = 0;
    auto run = [&](const std::string& name, const std::function<bool()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string err;
        try {
            ok = f();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!ok) ++failed;
        std::cout << (ok ? "ok  " : "FAIL") << "\t" << name << "\t" << std::fixed << std::setprecision(2) << s << "s";
        if (!err.empty()) std::cout << "\t" << err;
        std::cout << "\n";
    };
    Ring Z = integers(), Q = rationals(), F7 = prime_field(7);

    run("ring_ops", [&] {
        for (long i = 0; i < 20 * n; ++i) {
            for (const Ring& R : {Z, Q, F7, parse_ring("Z[t]/(t^3)"), parse_ring("Z[1/6]")}) {
                Elem x = random_element(R, g), y = random_element(R, g), z = random_element(R, g);
                if ((x + y) * z != x * z + y * z || x - x != R.zero()) return false;
            }
        }
        return true;
    });
    run("milnor_square", [&] {
        Ring M = milnor_ring(Z, Z.from_int(2));
        Elem gg = parse_elem(M.series(), "1/2 + 3*t");
        auto [x, p] = milnor_square_projections(milnor_square_pullback(M, Z.zero(), gg - parse_elem(M.series(), "1/2")));
        return x.is_zero() && p == gg - parse_elem(M.series(), "1/2");
    });
    run("bezout_and_decompose", [&] {
        PatchDatum d = PatchDatum::zariski(Z, Z.from_int(2), Z.from_int(3));
        for (long i = 0; i < 10 * n; ++i) {
            Elem c = random_element(d.A(), g);
            long k = uniform_long(g, 0, 4);
            auto [a, b] = d.decompose(c, k);
            if (a * d.h_power(k, d.A()) + d.iota(b) != c) return false;
        }
        Elem c = parse_elem(d.A(), "5/2");
        auto parts = bezout_decompose(c, Z.from_int(3), 1);
        return parts.principal + coerce(parts.integral, d.A()) == c;
    });
    run("reciprocal_witness", [&] {
        Ring P = parse_ring("Z[t]");
        Ring L = localization(P, P.gen(0));
        for (long i = 0; i < 5 * n; ++i) {
            unsigned deg = static_cast<unsigned>(uniform_long(g, 1, 4));
            Elem f = P.gen(0).pow(deg);
            for (unsigned e = 0; e < deg; ++e) f = f + P.from_int(uniform_long(g, -5, 5)) * P.gen(0).pow(e);
            auto w = reciprocal_localization_witness(f);
            if (coerce(f, L) != coerce(P.gen(0), L).pow(w.n) * laurent_image(w.g, L)) return false;
        }
        return true;
    });
    run("root_systems", [&] {
        for (const char* nm : {"A2", "A3", "A4", "D4", "D5"}) {
            SystemPtr S = RootSystem::parse(nm);
            for (const auto& r : constants_table(*S)) {
                if (S->N(r.beta, r.alpha) != -r.N) return false;
                if (S->N(S->negative(r.alpha), S->negative(r.beta)) != -r.N) return false;
            }
            if (S->rank() >= 3)
                for (RootIndex b = 0; b < static_cast<RootIndex>(S->size()); ++b) {
                    auto [x, y] = S->commutator_decomposition(b);
                    if (S->sum(x, y).index != b) return false;
                }
        }
        return true;
    });
    run("verify_relations", [&] {
        for (const char* nm : {"A2", "D4"}) {
            SystemPtr S = RootSystem::parse(nm);
            for (const RepPtr& rep : {Representation::adjoint(S), Representation::natural(S)}) {
                if (bracket_violations(*rep) != 0) return false;
                for (const Ring& R : {parse_ring("Zmod:6"), F7})
                    if (!verify_relations(*rep, R, quick ? 3 : 20, o.seed).ok()) return false;
            }
        }
        return true;
    });
    run("words", [&] {
        SystemPtr S = RootSystem::parse("A3");
        for (long i = 0; i < n; ++i) {
            SteinbergWord w = random_word(S, Z, 5, g);
            if (!rep_equal(commutator_reduce(w), w, RepKind::defining)) return false;
            if (!(w * w.inverse()).empty()) return false;
        }
        SteinbergWord s = symbol(S, 0, F7.from_int(2), F7.from_int(3));
        SteinbergWord y = y_element(S, 0, Z.from_int(2), Z.from_int(3));
        return k2_membership(s) && !k2_membership(y) && weyl(S, 0, F7.one()).size() == 3 &&
               substitute(y, RingHom::canonical(Z, F7)).ring() == F7;
    });
    run("congruence_lemma", [&] {
        SystemPtr S = RootSystem::parse("A2");
        for (long i = 0; i < n; ++i) {
            long a = uniform_long(g, 2, 6), b = uniform_long(g, 2, 6), c = uniform_long(g, -5, 5);
            if (!check_congruence_lemma(S, 0, Z.from_int(a), Z.from_int(b), Z.from_int(c), Ideal{Z.from_int(a)},
                                        Ideal{Z.from_int(b)}))
                return false;
        }
        return true;
    });
    run("milnor_k2", [&] {
        MilnorSymbolSum s = MilnorSymbolSum::symbol(Q.from_int(2), Q.from_int(3));
        if (tame_symbol(s, 3) != 2) return false;
        if (symbol_normalize(MilnorSymbolSum::symbol(Q.from_int(4), Q.from_int(5))).str() != "2*{2, 5}") return false;
        SystemPtr S = RootSystem::parse("A2");
        Ring F = rationals();
        SteinbergWord w = symbol(S, 0, F.from_int(2), F.from_int(3)) * symbol(S, 0, F.from_int(5), F.from_int(3));
        return tame_symbol(steinberg_to_milnor(w, 0), 5) == tame_symbol(MilnorSymbolSum::symbol(F.from_int(5), F.from_int(3)), 5);
    });
    run("simplicial", [&] {
        if (!simplicial_identity_check(Z, 3).ok() || !simplicial_identity_check(F7, 3).ok()) return false;
        SystemPtr S = RootSystem::parse("A2");
        Ring L1 = simplicial_level(Z, 1);
        MooreGenerator1 m1 = moore_generator1(S, 0, L1.one(), empty_word(S, L1));
        MooreGenerator2 m2 = moore_lift(m1);
        if (substitute(m2.word, face(Z, 0, 2)) != m1.word) return false;
        if (!substitute(m2.word, face(Z, 1, 2)).empty() || !substitute(m2.word, face(Z, 2, 2)).empty()) return false;
        SteinbergWord p = pi0_connectivity_witness(S, 1, Z.from_int(5));
        if (!substitute(p, face(Z, 1, 1)).empty() || substitute(p, face(Z, 0, 1)) != gen(S, 1, Z.from_int(5))) return false;
        Elem q = parse_elem(simplicial_level(Z, 1), "t1^3 - 2*t1 + 4");
        return crt_to_product(crt_from_product(crt_to_product(q))) == crt_to_product(q);
    });
    run("patching", [&] {
        PatchDatum d = PatchDatum::zariski(Z, Z.from_int(2), Z.from_int(3));
        SystemPtr S = RootSystem::parse("A3");
        TruncatedProRng pro(Z, Z.from_int(3));
        if (!pro.contains(Z.from_int(27), 3) || pro.contains(Z.from_int(27), 4)) return false;
        SteinbergWord gw = gen(S, 0, parse_elem(d.Bh(), "2/3"));
        ConjResult c = conj_word(d, gw, gen(S, 5, d.h_power(4, d.B())));
        if (!image_equal(change_ring(c.word, d.Bh()), conjugate(gw, gen(S, 5, d.h_power(4, d.Bh()))))) return false;
        PatchPair p = star_reduce(d, unit_pair(d, S), gen(S, 2, Z.from_int(5)));
        if (!image_equal(mu_word(d, p), empty_word(S, d.Ah()))) return false;
        if (!verify_T_relations(d, S, quick ? 3 : 20, o.seed).ok()) return false;
        SteinbergWord x = gen(S, 1, d.A().from_int(4));
        return glueing_demo(d, x, change_ring(x, d.Ah())).lambda_ok;
    });
    std::cout << (failed ? "selftest: " + std::to_string(failed) + " failed" : std::string("selftest: all passed")) << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steinberg groups, unstable K2 and patching over exact rings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_flag("--pretty", o.pretty, "human-readable output");

    std::function<int()> action;

    auto* roots = app.add_subcommand("roots", "roots and structure constants as TSV");
    std::string rtype = "A";
    int rrank = 2;
    bool rconst = false;
    roots->add_option("--type", rtype, "A or D")->check(CLI::IsMember({"A", "D"}));
    roots->add_option("--rank", rrank, "rank");
    roots->add_flag("--constants", rconst, "emit (alpha, beta, alpha+beta, N)");
    roots->callback([&] { action = [&] { return cmd_roots(o, rtype, rrank, rconst); }; });

    std::string word_path, rep_kind = "adjoint";
    bool check_id = false;
    auto* word = app.add_subcommand("word", "operations on Steinberg words");
    word->require_subcommand(1);
    auto* weval = word->add_subcommand("eval", "matrix image of a word");
    weval->add_option("--word", word_path, "word JSON")->required();
    weval->add_option("--rep", rep_kind, "adjoint, defining or vector");
    weval->add_flag("--check-identity", check_id, "exit 1 unless the image is the identity");
    weval->callback([&] { action = [&] { return cmd_eval(o, word_path, rep_kind, check_id); }; });
    auto* wred = word->add_subcommand("reduce", "commutator rewriting towards enumeration order");
    wred->add_option("--word", word_path, "word JSON")->required();
    wred->callback([&] { action = [&] { return cmd_word_reduce(o, word_path); }; });
    std::string ssys = "A2", sring = "Q", sroot = "e1-e2", su, sv;
    auto* wsym = word->add_subcommand("symbol", "the symbol word {u, v}");
    wsym->add_option("--phi", ssys, "root system");
    wsym->add_option("--ring", sring, "ring");
    wsym->add_option("--root", sroot, "root such as e1-e2");
    wsym->add_option("--u", su, "unit u")->required();
    wsym->add_option("--v", sv, "unit v")->required();
    wsym->callback([&] { action = [&] { return cmd_word_symbol(o, ssys, sring, sroot, su, sv); }; });

    auto* eval = app.add_subcommand("eval", "matrix image of a word");
    eval->add_option("--word", word_path, "word JSON")->required();
    eval->add_option("--rep", rep_kind, "adjoint, defining or vector");
    eval->add_flag("--check-identity", check_id, "exit 1 unless the image is the identity");
    eval->callback([&] { action = [&] { return cmd_eval(o, word_path, rep_kind, check_id); }; });

    std::vector<std::string> syms;
    std::string prime, batch;
    auto* k2m = app.add_subcommand("k2m", "Milnor K2 of Q");
    k2m->require_subcommand(1);
    auto* tame = k2m->add_subcommand("tame", "tame symbol at an odd prime");
    tame->add_option("--symbol", syms, "\"a,b\" or \"a,b,mult\"; repeatable");
    tame->add_option("--prime", prime, "odd prime");
    tame->add_option("--batch", batch, "JSON list of {symbol, prime}");
    tame->callback([&] { action = [&] { return cmd_k2m_tame(o, syms, prime, batch); }; });
    auto* norm = k2m->add_subcommand("normalize", "simplify a symbol sum");
    norm->add_option("--symbol", syms, "\"a,b\" or \"a,b,mult\"; repeatable")->required();
    norm->callback([&] { action = [&] { return cmd_k2m_normalize(o, syms); }; });

    int nmax = 3;
    std::string sring2 = "Z";
    auto* simp = app.add_subcommand("simplicial", "the simplicial ring R[Delta]");
    simp->require_subcommand(1);
    auto* scheck = simp->add_subcommand("check", "simplicial identities");
    scheck->add_option("--nmax", nmax, "highest level (2 or 3)");
    scheck->add_option("--ring", sring2, "ring");
    scheck->callback([&] { action = [&] { return cmd_simplicial_check(o, nmax, sring2); }; });
    auto* slift = simp->add_subcommand("lift", "lift a level-1 Moore generator to level 2");
    slift->add_option("--word", word_path, "word JSON over R[t1]")->required();
    slift->callback([&] { action = [&] { return cmd_simplicial_lift(o, word_path); }; });

    std::string pB = "int", pa = "2", pb = "3", phi = "A3", cert;
    bool pid = false, prel = false;
    long psamples = 100;
    auto* patch = app.add_subcommand("patch", "patching along B -> B[1/a] at h = b");
    patch->require_subcommand(1);
    auto datum_opts = [&](CLI::App* c) {
        c->add_option("--B", pB, "base ring B");
        c->add_option("--a", pa, "inverted element a");
        c->add_option("--b", pb, "patching element h = b");
        c->add_flag("--identity", pid, "use the identity datum A = B");
        c->add_option("--phi", phi, "root system");
    };
    auto* pdemo = patch->add_subcommand("demo", "glue a word over A back to B");
    datum_opts(pdemo);
    pdemo->add_option("--word", word_path, "word JSON over A")->required();
    pdemo->add_option("--certificate", cert, "word JSON over A_h");
    pdemo->callback([&] { action = [&] { return cmd_patch_demo(o, datum_arg(pB, pa, pb, pid), phi, word_path, cert); }; });
    auto* pver = patch->add_subcommand("verify", "relations of the operators T");
    datum_opts(pver);
    pver->add_flag("--relations", prel, "check R1, R2, R3 and companions (default)");
    pver->add_option("--samples", psamples, "samples");
    pver->callback([&] { action = [&] { return cmd_patch_verify(o, datum_arg(pB, pa, pb, pid), phi, psamples); }; });

    std::string mring = "int", ma = "2", mx = "0", mg = "t";
    auto* msq = app.add_subcommand("milnor-square", "pullback into R x tR_a[t] and back");
    msq->add_option("--R", mring, "ring R");
    msq->add_option("--a", ma, "element a");
    msq->add_option("--x", mx, "element of R");
    msq->add_option("--g", mg, "element of R_a[t] with g(0) = x");
    msq->callback([&] { action = [&] { return cmd_milnor_square(o, mring, ma, mx, mg); }; });

    bool quick = false;
    auto* self = app.add_subcommand("selftest", "reduced sweeps over every module");
    self->add_flag("--quick", quick, "smaller sample counts");
    self->callback([&] { action = [&] { return cmd_selftest(o, quick); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
