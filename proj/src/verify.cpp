#include "monideal/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "monideal/alexander.hpp"
#include "monideal/assoc.hpp"
#include "monideal/error.hpp"
#include "monideal/hvector.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "monideal/text_format.hpp"

namespace monideal {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_size(const std::string& value, std::size_t line, std::size_t column) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError(line, column, "expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

/// Runs `check`, turning cutoffs and precondition refusals into "na".
void guarded(RunReport& report, const std::string& name, const std::function<void()>& check) {
    try {
        check();
    } catch (const CutoffExceeded& e) {
        report.add(name, Status::not_applicable, std::string("cutoff: ") + e.what());
    } catch (const ConsistencyError& e) {
        report.add(name, Status::fail, e.what());
    }
}

std::string face_list(const SimplicialComplex& k, const std::vector<Face>& faces) {
    std::string out;
    for (Face f : faces) out += (out.empty() ? "{" : " {") + k.face_key(f) + "}";
    return out;
}

std::string shelling_name(ShellingResult::Verdict v) {
    switch (v) {
        case ShellingResult::Verdict::shellable:
            return "shellable";
        case ShellingResult::Verdict::not_shellable:
            return "not shellable";
        case ShellingResult::Verdict::indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

std::string local_h_witness(const LocalHReport& r) {
    std::string out;
    for (const auto& f : r.findings) out += (out.empty() ? "" : "; ") + f;
    return out;
}

void basic_checks(RunReport& report, const MonomialIdeal& m, const Config& config, const BettiTable& oracle) {
    const auto& names = m.names();
    const IrreducibleDecomposition decomposition = irreducible_decomposition_oracle(m);
    report.add("decomposition-reassembles", ideal_of(decomposition, names) == m);

    if (m.size() <= config.limits.subset_max_generators) {
        const bool same = scarf_faces(m.generators()) == scarf_faces_by_bucketing(m.generators());
        report.add("scarf-local-test-matches-bucketing", same);
    } else {
        report.add("scarf-local-test-matches-bucketing", Status::not_applicable, "more generators than subset_max_generators");
    }

    const LabeledComplex scarf = scarf_complex(m);
    std::string missing;
    for (Face f : scarf.complex.all_faces()) {
        if (oracle.at(face_size(f), scarf.label(f)) == 0) missing += "{" + scarf.complex.face_key(f) + "} ";
    }
    report.add("scarf-faces-are-betti-degrees", missing.empty(), trim(missing));

    guarded(report, "generic-iff-scarf-resolves", [&] {
        const MultigradedFreeComplex f = algebraic_scarf(m);
        const ExactnessReport exact = is_exact(f, m, config.field);
        const bool minimal = is_minimal(f);
        const bool edge = scarf_edge_condition(m, scarf);
        const bool generic = is_generic(m).is_generic;
        const bool resolves = exact.exact && minimal && edge;
        std::string witness = "generic=" + std::to_string(generic) + " exact=" + std::to_string(exact.exact) +
                              " minimal=" + std::to_string(minimal) + " edge=" + std::to_string(edge);
        report.add("generic-iff-scarf-resolves", generic == resolves, generic == resolves ? "" : witness);
    });

    if (m.size() <= config.limits.taylor_max_generators) {
        guarded(report, "betti-matches-taylor", [&] {
            const BettiTable taylor = betti_from_complex(taylor_complex(m, config.limits.taylor_max_generators), config.field);
            report.add("betti-matches-taylor", taylor == oracle);
        });
    } else {
        report.add("betti-matches-taylor", Status::not_applicable, "more generators than taylor_max_generators");
    }

    const DualContext ctx = DualContext::standard(m);
    guarded(report, "dual-involution", [&] {
        const MonomialIdeal dual = alexander_dual(m, ctx);
        report.add("dual-involution", alexander_dual(dual, ctx) == m);
    });

    if (m.num_vars() <= config.limits.inequality_max_vars) {
        guarded(report, "betti-inequality-sweep", [&] {
            const BettiInequalitySweep sweep = betti_inequality_sweep(m, ctx, config.field);
            std::string witness;
            if (!sweep.holds()) {
                witness = "i=" + std::to_string(sweep.failures.front().first) + " b=" +
                          exponent_string(sweep.failures.front().second);
            }
            report.add("betti-inequality-sweep", sweep.holds(), witness);
            report.data["betti_inequality"] = {{"checked", sweep.checked}, {"equalities", sweep.equalities}};
        });
    } else {
        report.add("betti-inequality-sweep", Status::not_applicable, "more variables than inequality_max_vars");
    }
}

void generic_checks(RunReport& report, const MonomialIdeal& m, const Config& config, const BettiTable& oracle,
                    const AssPrimeSet& ass) {
    const auto& names = m.names();
    report.add("scarf-complex-is-minimal-resolution", basis_degree_table(algebraic_scarf(m)) == oracle);
    report.add("generic-decomposition-matches-oracle", decompose_generic(m) == irreducible_decomposition_oracle(m));

    bool localized = true;
    std::string witness;
    if (m.num_vars() <= 20) {
        for (VarSet p = 1; p <= full_varset(m.num_vars()) && localized; ++p) {
            const MonomialIdeal local = localize(m, MonomialPrime{p});
            if (!local.is_zero() && !local.is_unit() && !is_generic(local).is_generic) {
                localized = false;
                witness = nlohmann::json(prime_names(MonomialPrime{p}, names)).dump();
            }
        }
    }
    report.add("localizations-stay-generic", localized, witness);

    const SpectrumReport spectrum = check_embedded_spectrum(m, config.field);
    std::string gaps;
    for (int c : spectrum.missing) gaps += (gaps.empty() ? "" : ",") + std::to_string(c);
    report.add("embedded-prime-spectrum", spectrum.holds(), gaps.empty() ? "" : "missing codims " + gaps);

    const ConnectivityReport connected = connectivity_sequence(m);
    std::string pair;
    if (!connected.holds()) {
        pair = nlohmann::json(prime_names(connected.disconnected.front().first, names)).dump() + " / " +
               nlohmann::json(prime_names(connected.disconnected.front().second, names)).dump();
    }
    report.add("connectivity-sequence", connected.holds(), pair);

    const ChainReport chains = check_saturated_chains(m);
    report.add("saturated-chains", chains.holds(),
               chains.holds() ? "" : nlohmann::json(prime_names(chains.failures.front(), names)).dump());

    if (!ass.has_embedded()) {
        report.add("facet-cardinalities", check_facet_cardinalities(m));
        const ShellabilityReport shell = shellability_consequences(m, config.field, config.limits.shelling_cutoff);
        const bool decided = shell.scarf.verdict != ShellingResult::Verdict::indeterminate &&
                             shell.stanley_reisner.verdict != ShellingResult::Verdict::indeterminate;
        if (shell.holds() && !decided) {
            report.add("cohen-macaulay-and-shellable", Status::not_applicable, "shelling search beyond the facet cutoff");
        } else {
            report.add("cohen-macaulay-and-shellable", shell.holds());
        }
        report.data["shellability"] = {{"scarf", shelling_name(shell.scarf.verdict)},
                                       {"stanley_reisner", shelling_name(shell.stanley_reisner.verdict)}};
    }

    const ComponentBoundReport bound = check_component_bound(m);
    if (bound.applicable) {
        report.add("component-count-bound", bound.holds,
                   std::to_string(bound.components) + " components, bound " + std::to_string(bound.bound));
    }
    const bool bivariate = std::all_of(m.generators().begin(), m.generators().end(),
                                       [](const Monomial& g) { return popcount(g.support()) == 2; });
    if (bivariate) {
        const BivariateReport b = check_bivariate(m);
        report.add("bivariate-component-count", b.holds());
    }

    const LocalHReport local = check_local_h_properties(extended_scarf_complex(m).labeled);
    report.add("local-h-properties-extended-scarf", local.all(), local_h_witness(local));
}

void cogeneric_checks(RunReport& report, const MonomialIdeal& m, const Config& config, const BettiTable& oracle) {
    const std::size_t n = m.num_vars();
    const CoScarfComplex cs = co_scarf(m);
    nlohmann::json interior = nlohmann::json::array();
    for (Face f : cs.interior) interior.push_back(cs.face_name(f));
    report.data["co_scarf_interior"] = interior;

    const MultigradedFreeComplex f = algebraic_co_scarf(cs, n);
    nlohmann::json facet_degrees = nlohmann::json::array();
    if (!f.strands.empty()) {
        std::vector<Monomial> degrees;
        for (const BasisElement& e : f.strands[0]) degrees.push_back(e.degree);
        std::sort(degrees.begin(), degrees.end());
        for (const Monomial& d : degrees) facet_degrees.push_back(d.vector());
    }
    report.data["co_scarf_facet_degrees"] = facet_degrees;
    const MultigradedFreeComplex aug = shifted_augmentation(f);
    report.data["co_scarf_resolution_shape"] = aug.ranks();
    const ExactnessReport exact = is_exact(aug, m, config.field);
    report.add("co-scarf-resolves", exact.exact && is_minimal(aug),
               exact.counterexample ? "degree " + exponent_string(*exact.counterexample) : "");
    report.add("co-scarf-betti-matches-oracle", basis_degree_table(aug) == oracle);

    const int d = depth_cogeneric(m);
    report.data["depth_from_interior"] = d;
    report.add("depth-from-interior-faces", d == depth(m, config.field));

    const CohenMacaulayReport cm = cm_cogeneric(m, config.field);
    report.data["cm_criteria"] = {cm.a_cohen_macaulay, cm.b_serre, cm.c_component_codims, cm.d_excess, cm.e_interior};
    report.add("cohen-macaulay-criteria-agree", cm.all_equal());

    const TypeBoundReport type = cm_type_bound(m, config.field);
    if (type.applicable) {
        report.add("type-at-least-components", type.holds,
                   "type " + std::to_string(type.type) + ", " + std::to_string(type.components) + " components");
    }
    report.add("gorenstein-iff-principal-or-irreducible", gorenstein(m, config.field) == principal_or_irreducible(m));

    const GeneratorBoundReport gens = generator_bound_cogeneric(m, config.field);
    if (gens.applicable) {
        report.add("generator-count-bound", gens.bound_holds && gens.consequences_hold,
                   std::to_string(gens.generators) + " generators, bound " + std::to_string(gens.bound));
    }

    const LocalHReport local = check_local_h_properties(cs.labeled());
    report.add("local-h-properties-co-scarf", local.all(), local_h_witness(local));
    if (cm.a_cohen_macaulay) {
        const InteriorFaceReport faces = check_interior_face_count(cs.labeled(), cm.codim, cs.extended.generator_vertices());
        report.add("interior-face-count", faces.holds(),
                   std::to_string(faces.interior_top) + " interior faces, " + std::to_string(faces.special_vertices) +
                       " special vertices");
    }
}

}  // namespace

void apply_config(Config& config, std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const std::string line = trim(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, 1, "expected key = value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        const std::size_t column = eq + 2;
        auto set = [&](std::size_t& slot, std::size_t fallback) {
            slot = parse_size(value, line_no, column);
            if (slot != fallback) {
                config.warnings.push_back("config overrides " + key + " = " + value + " (default " +
                                          std::to_string(fallback) + ")");
            }
        };
        const Limits defaults;
        if (key == "field") {
            try {
                config.field = Field::parse(value);
            } catch (const PreconditionError& e) {
                throw ParseError(line_no, column, e.what());
            }
        } else if (key == "subset_max_generators") {
            set(config.limits.subset_max_generators, defaults.subset_max_generators);
        } else if (key == "taylor_max_generators") {
            set(config.limits.taylor_max_generators, defaults.taylor_max_generators);
        } else if (key == "shelling_cutoff") {
            set(config.limits.shelling_cutoff, defaults.shelling_cutoff);
        } else if (key == "inequality_max_vars") {
            set(config.limits.inequality_max_vars, defaults.inequality_max_vars);
        } else {
            throw ParseError(line_no, 1, "unknown config key '" + key + "'");
        }
        if (end == text.size()) break;
    }
}

RunReport verify_all(const MonomialIdeal& m, const Config& config) {
    m.require_proper_nonzero();
    const auto& names = m.names();
    RunReport report;
    report.command = "verify-all";
    report.input_digest = digest(format_ideal(m));

    const GenericityReport generic = is_generic(m);
    const IrreducibleDecomposition decomposition = irreducible_decomposition_oracle(m);
    const AssPrimeSet ass = associated_primes(m);
    const BettiTable oracle = betti_oracle(m, config.field);
    const int pd = proj_dim(oracle);

    auto& data = report.data;
    data["field"] = config.field.name();
    data["ideal"] = monomial_list_json(m.generators(), names);
    data["generic"] = generic.is_generic;
    data["generic_old"] = is_generic_old(m);
    data["decomposition"] = decomposition_json(decomposition, names);
    nlohmann::json primes = nlohmann::json::array();
    nlohmann::json embedded = nlohmann::json::array();
    for (std::size_t i = 0; i < ass.primes.size(); ++i) {
        primes.push_back(prime_names(ass.primes[i], names));
        if (!ass.minimal[i]) embedded.push_back(prime_names(ass.primes[i], names));
    }
    data["associated_primes"] = primes;
    data["embedded_primes"] = embedded;
    data["codim"] = codim(m);
    data["proj_dim"] = pd;
    data["depth"] = static_cast<int>(m.num_vars()) - pd;
    data["cohen_macaulay"] = pd == codim(m);
    data["type"] = oracle.total(pd);
    data["betti_totals"] = oracle.totals();
    data["betti"] = betti_json(oracle);
    if (const auto len = colength(m)) {
        data["colength"] = *len;
    } else {
        data["colength"] = nullptr;
    }
    const DualContext ctx = DualContext::standard(m);
    data["dual"] = {{"bound", ctx.a.vector()}, {"generators", monomial_list_json(alexander_dual(m, ctx).generators(), names)}};
    const LabeledComplex scarf = scarf_complex(m);
    data["scarf_facets"] = scarf.complex.facets().size();
    data["scarf_complex"] = face_list(scarf.complex, scarf.complex.facets());

    basic_checks(report, m, config, oracle);
    if (!generic.is_generic) {
        data["saturated_chains"] = check_saturated_chains(m).holds();
        data["connected"] = connectivity_sequence(m).holds();
    }
    if (generic.is_generic) generic_checks(report, m, config, oracle, ass);

    bool cogeneric = false;
    try {
        cogeneric = is_cogeneric(m).is_cogeneric;
        report.add("cogeneric-iff-dual-generic", true);
    } catch (const ConsistencyError& e) {
        report.add("cogeneric-iff-dual-generic", false, e.what());
    }
    data["cogeneric"] = cogeneric;
    if (cogeneric) cogeneric_checks(report, m, config, oracle);
    return report;
}

RunReport verify_corpus(CorpusKind kind, std::uint64_t seed, const CorpusParams& params, const Config& config) {
    const std::vector<MonomialIdeal> corpus = generate_corpus(kind, seed, params);
    RunReport report;
    report.command = "corpus";
    report.seed = seed;
    std::string all_text;
    for (const MonomialIdeal& m : corpus) all_text += format_ideal(m) + "\n";
    report.input_digest = digest(all_text);

    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (pass, na)
    std::map<std::string, std::string> first_failure;
    std::vector<std::string> order;
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const RunReport one = verify_all(corpus[k], config);
        members.push_back({{"ideal", one.data["ideal"]}, {"digest", one.input_digest},
                           {"betti_totals", one.data["betti_totals"]}});
        for (const Verdict& v : one.verdicts) {
            if (!tally.count(v.check)) order.push_back(v.check);
            auto& t = tally[v.check];
            if (v.status == Status::pass) ++t.first;
            if (v.status == Status::not_applicable) ++t.second;
            if (v.status == Status::fail && !first_failure.count(v.check)) {
                first_failure[v.check] = "member " + std::to_string(k) + ": " + one.data["ideal"].dump() + " " + v.witness;
            }
        }
    }
    report.data["members"] = members;
    report.data["count"] = corpus.size();
    std::sort(order.begin(), order.end());
    for (const std::string& name : order) {
        const auto [pass, na] = tally[name];
        if (first_failure.count(name)) {
            report.add(name, Status::fail, first_failure[name]);
        } else if (pass == 0) {
            report.add(name, Status::not_applicable, std::to_string(na) + " not applicable");
        } else {
            report.add(name, Status::pass, std::to_string(pass) + " passed, " + std::to_string(na) + " not applicable");
        }
    }
    return report;
}

}  // namespace monideal
