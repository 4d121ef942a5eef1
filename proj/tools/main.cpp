// Command-line workbench: every subcommand loads JSON documents, runs the
// corresponding exact checks, and reports a verdict. Exit code 0 means all
// identities hold, 1 means a mathematical failure, 2 means bad input.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "trilie/cohomology.hpp"
#include "trilie/io.hpp"
#include "trilie/leibniz.hpp"
#include "trilie/operators.hpp"
#include "trilie/poly.hpp"
#include "trilie/two_term.hpp"

using namespace trilie;

namespace {

struct Common {
    bool json = false;
    bool oracle = false;
    unsigned seed = 20240801;
    std::string lambda_override;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "machine-readable report on stdout");
    cmd->add_flag("--oracle", c.oracle,
                  "run redundant cross-checks; never changes the verdict");
    cmd->add_option("--seed", c.seed, "seed for randomized cross-checks");
    cmd->add_option("--lambda", c.lambda_override,
                    "override the weight stored in the documents");
}

Scalar parse_lambda(const std::string& text) {
    if (auto s = parse_scalar(text)) return *s;
    if (text.find('.') != std::string::npos)
        throw InputError("--lambda: floating-point literal forbidden; write 1/2");
    throw InputError("--lambda: bad rational literal \"" + text + "\"");
}

AlgebraDoc load_algebra(const std::string& path, const Common& c) {
    AlgebraDoc doc = parse_algebra(load_json_file(path));
    if (!c.lambda_override.empty()) doc.dd.lambda = parse_lambda(c.lambda_override);
    return doc;
}

// --rep accepts "adjoint", "trivial:<dim>", or a path to a representation
// document. The weight always follows the algebra document (or --lambda).
Representation resolve_rep(const std::string& spec, const AlgebraDoc& base) {
    if (spec == "adjoint") return adjoint_rep(base.algebra, base.dd);
    if (spec.rfind("trivial:", 0) == 0) {
        int dv = 0;
        try {
            dv = std::stoi(spec.substr(8));
        } catch (const std::exception&) {
            throw InputError("--rep trivial:<dim> needs an integer dimension");
        }
        if (dv < 0) throw InputError("--rep trivial:<dim> needs a nonnegative dimension");
        return trivial_rep(base.algebra, dv, Matrix(dv, dv), base.dd.lambda);
    }
    Representation r = parse_representation(load_json_file(spec), base.dd.lambda);
    if (r.n() != base.algebra.dim())
        throw InputError("representation dimension does not match the algebra");
    return r;
}

Complex resolve_complex(const std::string& name) {
    if (name == "plain") return Complex::Plain;
    if (name == "corrected") return Complex::Corrected;
    if (name == "pair") return Complex::Pair;
    throw InputError("--complex must be plain, corrected, or pair");
}

int emit(const std::string& command, const Verdict& v, const Json& computed, const Common& c) {
    if (c.json) {
        Json out;
        out["format"] = 1;
        out["command"] = command;
        Json verdict = verdict_to_json(v);
        out["verdict"] = verdict["verdict"];
        out["violations"] = verdict["violations"];
        out["computed"] = computed;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << command << ": " << (v.pass() ? "pass" : "fail") << "\n";
        std::size_t shown = 0;
        for (const auto& viol : v.violations) {
            if (++shown > 10) {
                std::cout << "  ... and " << (v.violations.size() - 10) << " more\n";
                break;
            }
            std::cout << "  " << viol.identity << " at (";
            for (std::size_t i = 0; i < viol.tuple.size(); ++i)
                std::cout << (i ? "," : "") << viol.tuple[i];
            std::cout << ") defect [";
            for (std::size_t i = 0; i < viol.defect.size(); ++i)
                std::cout << (i ? "," : "") << scalar_str(viol.defect[i]);
            std::cout << "]\n";
        }
        if (!computed.empty()) std::cout << computed.dump(2) << "\n";
    }
    return v.pass() ? 0 : 1;
}

Json report_to_json(const CohomologyReport& rep) {
    Json arr = Json::array();
    for (const auto& d : rep.degrees) {
        Json e;
        e["degree"] = d.p;
        e["dim_space"] = d.dim_space;
        e["dim_cocycles"] = d.dim_cocycles;
        e["dim_coboundaries"] = d.dim_coboundaries;
        e["dim_cohomology"] = d.dim_cohomology;
        arr.push_back(std::move(e));
    }
    return arr;
}

Vec load_cochain_vec(const std::string& path, int n, int dimV, int degree) {
    Cochain f = parse_cochain(load_json_file(path), n, dimV);
    if (f.sp.p != degree)
        throw InputError(path + ": expected a degree-" + std::to_string(degree) + " cochain");
    return f.c;
}

// A pair cochain of degree p is a degree-p file plus a degree-(p-1) file.
Vec load_complex_vec(Complex which, const std::vector<std::string>& paths, std::size_t at,
                     int n, int dimV, int degree) {
    Vec top = load_cochain_vec(paths[at], n, dimV, degree);
    if (which != Complex::Pair) return top;
    return concat(top, load_cochain_vec(paths[at + 1], n, dimV, degree - 1));
}

TwistDoc load_twist(const std::string& path, const AlgebraDoc& base, const Representation& r) {
    return parse_twist(load_json_file(path), base.algebra.dim(), r.dimV());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for weighted differential ternary brackets"};
    app.require_subcommand(1);

    Common c;
    std::vector<std::string> files;
    std::string rep_spec = "adjoint";
    std::string complex_name = "plain";
    int max_degree = 3;
    int degree = 2;

    auto* cmd_verify = app.add_subcommand("verify", "core bracket and differential identities");
    cmd_verify->add_option("algebra", files)->required()->expected(1);
    cmd_verify->add_option("--rep", rep_spec, "also check this representation");
    add_common(cmd_verify, c);

    auto* cmd_coh = app.add_subcommand("cohomology", "dimension table of the three complexes");
    cmd_coh->add_option("algebra", files)->required()->expected(1);
    cmd_coh->add_option("--rep", rep_spec);
    cmd_coh->add_option("--max-degree", max_degree);
    add_common(cmd_coh, c);

    auto* cmd_cocycle = app.add_subcommand("check-cocycle", "test a cochain against the coboundary");
    cmd_cocycle->add_option("files", files, "algebra + cochain (+ second cochain for pair)")
        ->required()
        ->expected(2, 3);
    cmd_cocycle->add_option("--rep", rep_spec);
    cmd_cocycle->add_option("--degree", degree);
    cmd_cocycle->add_option("--complex", complex_name);
    add_common(cmd_cocycle, c);

    auto* cmd_cohomologous =
        app.add_subcommand("cohomologous", "witness that two cocycles differ by a coboundary");
    cmd_cohomologous
        ->add_option("files", files, "algebra + two cochains (or two cochain pairs for pair)")
        ->required()
        ->expected(3, 5);
    cmd_cohomologous->add_option("--rep", rep_spec);
    cmd_cohomologous->add_option("--degree", degree);
    cmd_cohomologous->add_option("--complex", complex_name);
    add_common(cmd_cohomologous, c);

    auto* cmd_deform = app.add_subcommand("deform-check", "coefficients of a formal deformation");
    cmd_deform->add_option("files", files, "algebra + deformation")->required()->expected(2);
    cmd_deform->add_option("--max-degree", max_degree);
    add_common(cmd_deform, c);

    auto* cmd_nij = app.add_subcommand("nijenhuis", "cubic compatibility of an endomorphism");
    cmd_nij->add_option("files", files, "algebra + operator")->required()->expected(2);
    add_common(cmd_nij, c);

    auto* cmd_oop = app.add_subcommand("o-operator", "relative operator against a representation");
    cmd_oop->add_option("files", files, "algebra + representation + operator")
        ->required()
        ->expected(3);
    add_common(cmd_oop, c);

    auto* cmd_extend = app.add_subcommand("extend", "assemble the twisted direct sum");
    cmd_extend->add_option("files", files, "algebra + representation + twist")
        ->required()
        ->expected(3);
    add_common(cmd_extend, c);

    auto* cmd_extract =
        app.add_subcommand("extract-extension", "recover base, action, and twist from a splitting");
    cmd_extract->add_option("files", files, "big algebra + splitting")->required()->expected(2);
    add_common(cmd_extract, c);

    auto* cmd_equiv =
        app.add_subcommand("equivalent-extensions", "witness between two twisted sums");
    cmd_equiv->add_option("files", files, "algebra + representation + twist + twist")
        ->required()
        ->expected(4);
    add_common(cmd_equiv, c);

    auto* cmd_two = app.add_subcommand("two-term-check", "coherence of a two-term structure");
    cmd_two->add_option("structure", files)->required()->expected(1);
    add_common(cmd_two, c);

    auto* cmd_skel =
        app.add_subcommand("skeletal-roundtrip", "two-term structure <-> degree-3 pair cocycle");
    cmd_skel->add_option("structure", files)->required()->expected(1);
    add_common(cmd_skel, c);

    auto* cmd_strict =
        app.add_subcommand("strict-roundtrip", "two-term structure <-> crossed module");
    cmd_strict->add_option("structure", files)->required()->expected(1);
    add_common(cmd_strict, c);

    auto* cmd_constraints =
        app.add_subcommand("constraints", "polynomial equations on the differential entries");
    cmd_constraints->add_option("algebra", files)->required()->expected(1);
    add_common(cmd_constraints, c);

    auto* cmd_bridge =
        app.add_subcommand("leibniz-bridge", "weight-0 comparison with the induced binary complex");
    cmd_bridge->add_option("algebra", files)->required()->expected(1);
    cmd_bridge->add_option("--rep", rep_spec);
    cmd_bridge->add_option("--max-degree", max_degree);
    add_common(cmd_bridge, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_verify) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Verdict v = check_fundamental_identity(doc.algebra);
            v.merge(check_weighted_differential(doc.algebra, doc.dd));
            if (cmd_verify->count("--rep")) {
                Representation r = resolve_rep(rep_spec, doc);
                v.merge(check_representation(doc.algebra, doc.dd, r));
            }
            Json computed;
            computed["dim"] = doc.algebra.dim();
            computed["weight"] = scalar_to_json(doc.dd.lambda);
            return emit("verify", v, computed, c);
        }

        if (*cmd_coh) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(rep_spec, doc);
            Complexes cc(doc.algebra, doc.dd, r);
            Verdict v;
            Json computed;
            for (auto [which, name] : {std::pair{Complex::Plain, "plain"},
                                       {Complex::Corrected, "corrected"},
                                       {Complex::Pair, "pair"}}) {
                CohomologyReport rep = cohomology_report(cc, which, max_degree);
                computed[name] = report_to_json(rep);
                if (!rep.chain_property)
                    v.report(std::string(name) + "_chain_property", {}, {Scalar(1)});
                if (c.oracle) {
                    // independent cocycle count through an explicit kernel basis
                    for (const auto& d : rep.degrees) {
                        auto ker = kernel_basis(boundary_of(cc, which, d.p));
                        if (static_cast<std::int64_t>(ker.size()) != d.dim_cocycles)
                            v.report(std::string(name) + "_oracle_kernel", {d.p}, {Scalar(1)});
                    }
                }
            }
            if (c.oracle) computed["oracle"] = "kernel-basis cross-check";
            return emit("cohomology", v, computed, c);
        }

        if (*cmd_cocycle) {
            Complex which = resolve_complex(complex_name);
            if (which == Complex::Pair && files.size() != 3)
                throw InputError("pair complex needs two cochain files");
            if (which != Complex::Pair && files.size() != 2)
                throw InputError(complex_name + " complex needs one cochain file");
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(rep_spec, doc);
            Complexes cc(doc.algebra, doc.dd, r);
            Vec f = load_complex_vec(which, files, 1, doc.algebra.dim(), r.dimV(), degree);
            Verdict v;
            v.report("cocycle", {degree}, boundary_of(cc, which, degree).apply(f));
            return emit("check-cocycle", v, Json::object(), c);
        }

        if (*cmd_cohomologous) {
            Complex which = resolve_complex(complex_name);
            std::size_t per = which == Complex::Pair ? 2 : 1;
            if (files.size() != 1 + 2 * per)
                throw InputError("expected the algebra and two cochains of the chosen complex");
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(rep_spec, doc);
            Complexes cc(doc.algebra, doc.dd, r);
            Vec f1 = load_complex_vec(which, files, 1, doc.algebra.dim(), r.dimV(), degree);
            Vec f2 = load_complex_vec(which, files, 1 + per, doc.algebra.dim(), r.dimV(), degree);
            auto witness = cohomologous(cc, which, degree, f1, f2);
            Verdict v;
            if (!witness) v.report("cohomologous", {degree}, {Scalar(1)});
            Json computed;
            if (witness) computed["witness"] = vec_to_json(*witness);
            return emit("cohomologous", v, computed, c);
        }

        if (*cmd_deform) {
            AlgebraDoc doc = load_algebra(files[0], c);
            DeformationData data = parse_deformation(load_json_file(files[1]), doc);
            Verdict v =
                deformation_check(data, cmd_deform->count("--max-degree") ? max_degree : -1);
            Json computed;
            computed["order"] = data.order();
            if (data.order() == 1) {
                CocycleAgreement agr =
                    infinitesimal_is_2cocycle(doc.algebra, doc.dd, data.pis[1], data.phis[1]);
                computed["infinitesimal_cocycle"] = agr.cocycle;
                computed["routes_agree"] = agr.agree;
                if (!agr.agree) v.report("cocycle_route_agreement", {}, {Scalar(1)});
            }
            return emit("deform-check", v, computed, c);
        }

        if (*cmd_nij) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Matrix nmat = parse_operator(load_json_file(files[1]));
            if (nmat.rows() != doc.algebra.dim() || nmat.cols() != doc.algebra.dim())
                throw InputError("operator must be square of the algebra dimension");
            Verdict v = is_nijenhuis(doc.algebra, doc.dd, nmat);
            Json computed;
            if (v.pass()) {
                auto [deformed, ddd] = deformed_bracket(doc.algebra, doc.dd, nmat, false);
                Verdict cert = check_fundamental_identity(deformed);
                cert.merge(check_weighted_differential(deformed, ddd));
                v.merge(cert);
                computed["deformed"] = serialize_algebra({deformed, ddd});
            }
            return emit("nijenhuis", v, computed, c);
        }

        if (*cmd_oop) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(files[1], doc);
            Matrix k = parse_operator(load_json_file(files[2]));
            if (k.rows() != doc.algebra.dim() || k.cols() != r.dimV())
                throw InputError("operator must map the module into the algebra");
            Verdict v = is_o_operator(doc.algebra, doc.dd, r, k);
            Json computed;
            if (v.pass()) {
                v.merge(o_operator_cocycle_check(doc.algebra, doc.dd, r, k));
                auto [induced, idd] = bracket_K(doc.algebra, doc.dd, r, k, false);
                computed["induced"] = serialize_algebra({induced, idd});
            }
            if (c.oracle) {
                HatAgreement hat = hat_K_equivalence(doc.algebra, doc.dd, r, k);
                computed["hat_shift_agrees"] = hat.agree;
                if (!hat.agree) v.report("hat_shift_agreement", {}, {Scalar(1)});
            }
            return emit("o-operator", v, computed, c);
        }

        if (*cmd_extend) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(files[1], doc);
            TwistDoc twist = load_twist(files[2], doc, r);
            ExtensionDatum e{doc.algebra, doc.dd, r, twist.psi, twist.chi};
            Verdict v = pair_2cocycle_check(e);
            Json computed;
            if (v.pass()) {
                AssembledExtension ext = extension_from_cocycle(e, false);
                v.merge(ext.cert);
                computed["assembled"] = serialize_algebra({ext.hat, ext.hat_d});
                computed["embed"] = matrix_to_json(ext.embed);
                computed["project"] = matrix_to_json(ext.project);
                computed["section"] = matrix_to_json(ext.section);
            }
            return emit("extend", v, computed, c);
        }

        if (*cmd_extract) {
            AlgebraDoc doc = load_algebra(files[0], c);
            SplittingDoc split = parse_splitting(load_json_file(files[1]), doc.algebra.dim());
            ExtractionResult res = cocycle_from_extension(doc.algebra, doc.dd, split.embed,
                                                          split.project, split.section);
            Verdict v = res.preconditions;
            v.merge(res.cert);
            Json computed;
            if (res.datum) {
                computed["base"] = serialize_algebra({res.datum->base, res.datum->base_d});
                computed["representation"] = serialize_representation(res.datum->rho);
                computed["twist"] = serialize_twist({res.datum->psi, res.datum->chi},
                                                    res.datum->base.dim(),
                                                    res.datum->rho.dimV());
            }
            return emit("extract-extension", v, computed, c);
        }

        if (*cmd_equiv) {
            AlgebraDoc doc = load_algebra(files[0], c);
            Representation r = resolve_rep(files[1], doc);
            TwistDoc t1 = load_twist(files[2], doc, r);
            TwistDoc t2 = load_twist(files[3], doc, r);
            ExtensionDatum e1{doc.algebra, doc.dd, r, t1.psi, t1.chi};
            ExtensionDatum e2{doc.algebra, doc.dd, r, t2.psi, t2.chi};
            EquivalenceResult res = extensions_equivalent(e1, e2);
            Verdict v = res.verification;
            if (!res.witness) v.report("equivalence_witness", {}, {Scalar(1)});
            Json computed;
            if (res.witness) computed["witness"] = serialize_operator(*res.witness);
            return emit("equivalent-extensions", v, computed, c);
        }

        if (*cmd_two) {
            TwoTermAlgebra t = parse_two_term(load_json_file(files[0]));
            return emit("two-term-check", check_two_term(t), Json::object(), c);
        }

        if (*cmd_skel) {
            TwoTermAlgebra t = parse_two_term(load_json_file(files[0]));
            if (!t.h.is_zero())
                throw InputError("structure is not skeletal: the connecting map is nonzero");
            SkeletalCocycle fwd = skeletal_to_cocycle(t, false);
            Verdict v = fwd.cert;
            Json computed;
            if (v.pass()) {
                SkeletalResult back =
                    cocycle_to_skeletal(fwd.base, fwd.base_d, fwd.rho, fwd.pair3, false);
                v.merge(back.cert);
                if (back.structure) {
                    v.report("roundtrip_l5", {}, sub(back.structure->l5.c, t.l5.c));
                    v.report("roundtrip_d2", {},
                             sub(cochain2_from_trimap(back.structure->d2, t.n0, t.n1),
                                 cochain2_from_trimap(t.d2, t.n0, t.n1)));
                }
                computed["cocycle"] = vec_to_json(fwd.pair3);
            }
            return emit("skeletal-roundtrip", v, computed, c);
        }

        if (*cmd_strict) {
            TwoTermAlgebra t = parse_two_term(load_json_file(files[0]));
            if (!is_zero(t.l5.c) || !t.d2.table().empty())
                throw InputError("structure is not strict: corrections are nonzero");
            CrossedResult fwd = strict_to_crossed(t, false);
            Verdict v = fwd.cert;
            Json computed;
            if (v.pass() && fwd.module) {
                computed["crossed_module"] = serialize_crossed_module(*fwd.module);
                StrictResult back = crossed_to_strict(*fwd.module, false);
                v.merge(back.cert);
                if (back.structure) {
                    v.report("roundtrip_h", {}, flatten(back.structure->h - t.h));
                    if (!(back.structure->l30.table() == t.l30.table()))
                        v.report("roundtrip_bracket", {}, {Scalar(1)});
                }
            }
            return emit("strict-roundtrip", v, computed, c);
        }

        if (*cmd_constraints) {
            AlgebraDoc doc = load_algebra(files[0], c);
            ConstraintSystem sys = derive_differential_constraints(doc.algebra, doc.dd.lambda);
            Verdict v = evaluate_constraints(sys, doc.dd.d);
            Json computed;
            Json eqs = Json::array();
            for (const Poly& p : sys.equations) eqs.push_back(poly_str(p, doc.algebra.dim()));
            computed["equations"] = std::move(eqs);
            if (c.oracle) {
                // random matrices must get the same verdict from the
                // polynomial system and from direct expansion
                std::mt19937 gen(c.seed);
                std::uniform_int_distribution<long> dist(-3, 3);
                const int n = doc.algebra.dim();
                int trials = 50, disagreements = 0;
                for (int trial = 0; trial < trials; ++trial) {
                    Matrix d(n, n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) d(i, j) = dist(gen);
                    bool sym = evaluate_constraints(sys, d).pass();
                    bool dir =
                        check_weighted_differential(doc.algebra, {d, doc.dd.lambda}).pass();
                    if (sym != dir) ++disagreements;
                }
                computed["oracle_trials"] = trials;
                computed["oracle_disagreements"] = disagreements;
                if (disagreements > 0) v.report("constraints_oracle", {}, {Scalar(1)});
            }
            return emit("constraints", v, computed, c);
        }

        if (*cmd_bridge) {
            AlgebraDoc doc = load_algebra(files[0], c);
            if (doc.dd.lambda != 0)
                throw InputError("the bridge is defined at weight 0 only");
            Representation r = resolve_rep(rep_spec, doc);
            Complexes cc(doc.algebra, doc.dd, r);
            BridgeReport rep = leibniz_bridge(cc, max_degree);
            Verdict v = rep.module_axioms;
            Json computed;
            Json degs = Json::array();
            for (const auto& d : rep.degrees) {
                Json e;
                e["degree"] = d.p;
                e["partial_match"] = d.partial_match;
                e["delta_match"] = d.delta_match;
                e["pair_match"] = d.pair_match;
                degs.push_back(std::move(e));
                if (!d.partial_match || !d.delta_match || !d.pair_match)
                    v.report("bridge_degree", {d.p}, {Scalar(1)});
            }
            computed["degrees"] = std::move(degs);
            computed["ok"] = rep.ok;
            return emit("leibniz-bridge", v, computed, c);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
