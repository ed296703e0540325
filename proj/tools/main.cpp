#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monideal/alexander.hpp"
#include "monideal/assoc.hpp"
#include "monideal/binomial.hpp"
#include "monideal/corpus.hpp"
#include "monideal/error.hpp"
#include "monideal/hvector.hpp"
#include "monideal/report.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "monideal/text_format.hpp"
#include "monideal/verify.hpp"

using namespace monideal;
using nlohmann::json;

namespace {

struct Options {
    bool json = false;
    bool timing = false;
    std::string field = "q";
    std::optional<std::uint64_t> seed;
    std::string config_path;
    std::string bound;
    std::string input;
};

struct Outcome {
    RunReport report;
    std::string text;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) throw PreconditionError("empty entry in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<std::int64_t> parse_integers(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const std::string& s : split_list(text)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(s, &used));
            if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::logic_error&) {
            throw PreconditionError("expected an integer, got '" + s + "'");
        }
    }
    return out;
}

DualContext context_for(const MonomialIdeal& m, const Options& o) {
    if (o.bound.empty()) return DualContext::standard(m);
    std::vector<Exponent> a;
    for (std::int64_t v : parse_integers(o.bound)) {
        if (v < 0 || v > 1'000'000) throw PreconditionError("bound entries must be between 0 and 1000000");
        a.push_back(static_cast<Exponent>(v));
    }
    DualContext ctx{Monomial(std::move(a))};
    ctx.validate_for(m);
    return ctx;
}

VarSet variables_named(const std::vector<std::string>& wanted, const std::vector<std::string>& names) {
    VarSet out = 0;
    for (const std::string& w : wanted) {
        const auto it = std::find(names.begin(), names.end(), w);
        if (it == names.end()) throw PreconditionError("unknown variable '" + w + "'");
        out |= VarSet{1} << static_cast<std::size_t>(it - names.begin());
    }
    return out;
}

std::string ideal_text(const std::vector<Monomial>& gens, const std::vector<std::string>& names) {
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i], names);
    return out + ">";
}

std::string component_text(const IrreducibleComponent& c, const std::vector<std::string>& names) {
    std::vector<Monomial> gens;
    for (std::size_t s = 0; s < names.size(); ++s) {
        if (c.bound[s] > 0) gens.push_back(Monomial::pure_power(names.size(), s, c.bound[s]));
    }
    return ideal_text(gens, names);
}

std::string prime_text(const MonomialPrime& p, const std::vector<std::string>& names) {
    std::string out = "<";
    const auto vars = prime_names(p, names);
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
    return out + ">";
}

class Cli {
public:
    explicit Cli(Options& o) : o_(o) {}

    Field field() const { return config().field; }

    Config config() const {
        Config c;
        if (!o_.config_path.empty()) apply_config(c, read_file(o_.config_path));
        c.field = Field::parse(o_.field);
        return c;
    }

    MonomialIdeal ideal() const { return parse_ideal(read_input(o_.input)); }
    BinomialSystem binomials() const { return parse_binomials(read_input(o_.input)); }

    Outcome begin(const std::string& command, const std::string& canonical_input) const {
        Outcome out;
        out.report.command = command;
        out.report.input_digest = digest(canonical_input);
        out.report.seed = o_.seed;
        return out;
    }

private:
    Options& o_;
};

Outcome cmd_check_generic(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("check-generic", format_ideal(m));
    const GenericityReport g = is_generic(m);
    json violations = json::array();
    for (const auto& [i, j] : g.violations) violations.push_back({i + 1, j + 1});
    json witnesses = json::array();
    for (const auto& [pair, l] : g.witnesses) witnesses.push_back({{"pair", {pair.first + 1, pair.second + 1}}, {"witness", l + 1}});
    out.report.data = {{"generic", g.is_generic}, {"generic_old", is_generic_old(m)}, {"violations", violations},
                       {"witnesses", witnesses}};
    out.text = std::string(g.is_generic ? "generic" : "not generic") + "\n";
    for (const auto& [i, j] : g.violations) out.text += "violation: generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + "\n";
    return out;
}

Outcome cmd_check_cogeneric(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("check-cogeneric", format_ideal(m));
    const CogenericityReport c = is_cogeneric(m);
    json violations = json::array();
    for (const auto& [i, j] : c.violations) violations.push_back({i + 1, j + 1});
    out.report.data = {{"cogeneric", c.is_cogeneric}, {"dual_is_generic", c.dual_is_generic},
                       {"decomposition", decomposition_json(c.decomposition, m.names())}, {"violations", violations}};
    out.text = std::string(c.is_cogeneric ? "cogeneric" : "not cogeneric") + "\n";
    for (const auto& [i, j] : c.violations) out.text += "violation: components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + "\n";
    return out;
}

Outcome complex_outcome(const Cli& cli, const std::string& command, const MonomialIdeal& m, const std::string& complex_json) {
    Outcome out = cli.begin(command, format_ideal(m));
    out.report.data["complex"] = json::parse(complex_json);
    out.text = complex_json + "\n";
    return out;
}

Outcome cmd_scarf(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    return complex_outcome(cli, "scarf", m, to_json(scarf_complex(m)));
}

Outcome cmd_extended(const Cli& cli, std::optional<int> d) {
    const MonomialIdeal m = cli.ideal();
    std::optional<Exponent> big;
    if (d) big = static_cast<Exponent>(*d);
    const ExtendedScarfComplex e = extended_scarf_complex(m, big);
    Outcome out = complex_outcome(cli, "extended", m, to_json(e.labeled));
    out.report.data["D"] = e.D;
    return out;
}

Outcome cmd_stanley_reisner(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    return complex_outcome(cli, "stanley-reisner", m, to_json(stanley_reisner(m)));
}

Outcome cmd_decompose(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("decompose", format_ideal(m));
    const IrreducibleDecomposition oracle = irreducible_decomposition_oracle(m);
    out.report.data["components"] = decomposition_json(oracle, m.names());
    out.report.add("components-reassemble", ideal_of(oracle, m.names()) == m);
    if (is_generic(m).is_generic) {
        out.report.add("scarf-decomposition-matches", decompose_generic(m) == oracle);
    }
    for (const auto& c : oracle.components) out.text += component_text(c, m.names()) + "\n";
    return out;
}

Outcome cmd_resolve(const Cli& cli, const std::string& kind) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("resolve " + kind, format_ideal(m));
    BettiTable table;
    if (kind == "betti") {
        table = betti_oracle(m, cli.field());
    } else {
        const MultigradedFreeComplex f = kind == "scarf" ? algebraic_scarf(m) : taylor_complex(m);
        out.report.data["ranks"] = f.ranks();
        const ExactnessReport exact = is_exact(f, m, cli.field());
        const bool minimal = is_minimal(f);
        out.report.data["exact"] = exact.exact;
        out.report.data["minimal"] = minimal;
        if (kind == "scarf") {
            out.report.data["generic"] = is_generic(m).is_generic;
            table = basis_degree_table(f);
        } else {
            out.report.add("taylor-resolves", exact.exact);
            table = betti_from_complex(f, cli.field());
        }
        out.text = "ranks: " + json(f.ranks()).dump() + "\nexact: " + (exact.exact ? "yes" : "no") +
                   "\nminimal: " + (minimal ? "yes" : "no") + "\n";
    }
    out.report.data["betti"] = betti_json(table);
    out.text += betti_grid(table);
    return out;
}

Outcome cmd_dual(const Cli& cli, const Options& o) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("dual", format_ideal(m));
    const DualContext ctx = context_for(m, o);
    const MonomialIdeal dual = alexander_dual(m, ctx);
    out.report.data = {{"bound", ctx.a.vector()}, {"generators", monomial_list_json(dual.generators(), m.names())}};
    out.text = format_ideal(dual);
    return out;
}

Outcome cmd_coscarf(const Cli& cli, bool allow) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("coscarf", format_ideal(m));
    const CoScarfComplex cs = co_scarf(m, allow);
    json interior = json::array();
    for (Face f : cs.interior) interior.push_back(cs.face_name(f));
    const MultigradedFreeComplex aug = shifted_augmentation(algebraic_co_scarf(cs, m.num_vars()));
    out.report.data = {{"complex", json::parse(to_json(cs.labeled()))}, {"D", cs.D()}, {"interior", interior},
                       {"resolution_shape", aug.ranks()}};
    if (!allow || is_cogeneric(m).is_cogeneric) {
        const ExactnessReport exact = is_exact(aug, m, cli.field());
        out.report.add("co-scarf-resolves", exact.exact && is_minimal(aug));
    }
    out.text = "interior faces: " + interior.dump() + "\nresolution shape: " + json(aug.ranks()).dump() + "\n";
    return out;
}

Outcome cmd_depth(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("depth", format_ideal(m));
    const int d = depth(m, cli.field());
    out.report.data["depth"] = d;
    out.text = "depth: " + std::to_string(d) + "\n";
    if (is_cogeneric(m).is_cogeneric) {
        const int from_faces = depth_cogeneric(m);
        out.report.data["depth_from_interior"] = from_faces;
        out.report.add("depth-from-interior-faces", from_faces == d);
    }
    return out;
}

Outcome cmd_cm(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("cm", format_ideal(m));
    const bool cm = is_cohen_macaulay(m, cli.field());
    out.report.data["cohen_macaulay"] = cm;
    out.text = std::string("cohen-macaulay: ") + (cm ? "yes" : "no") + "\n";
    if (is_cogeneric(m).is_cogeneric) {
        const CohenMacaulayReport r = cm_cogeneric(m, cli.field());
        out.report.data["criteria"] = {{"a", r.a_cohen_macaulay}, {"b", r.b_serre}, {"c", r.c_component_codims},
                                       {"d", r.d_excess}, {"e", r.e_interior}};
        out.report.add("cohen-macaulay-criteria-agree", r.all_equal());
        out.text += "criteria (a)-(e): " + out.report.data["criteria"].dump() + "\n";
    }
    const SerreReport s2 = serre_s2(m, cli.field());
    out.report.data["serre_s2"] = s2.holds;
    if (s2.failing_prime) out.report.data["s2_failing_prime"] = prime_names(*s2.failing_prime, m.names());
    return out;
}

Outcome cmd_type(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("type", format_ideal(m));
    const std::size_t t = cm_type(m, cli.field());
    out.report.data["type"] = t;
    out.report.data["gorenstein"] = gorenstein(m, cli.field());
    out.text = "type: " + std::to_string(t) + "\n";
    if (is_cogeneric(m).is_cogeneric) {
        const TypeBoundReport b = cm_type_bound(m, cli.field());
        out.report.data["components"] = b.components;
        if (b.applicable) out.report.add("type-at-least-components", b.holds);
        out.report.add("gorenstein-iff-principal-or-irreducible", gorenstein(m, cli.field()) == principal_or_irreducible(m));
    }
    return out;
}

Outcome cmd_ass(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("ass", format_ideal(m));
    const AssPrimeSet ass = associated_primes(m);
    json primes = json::array();
    for (std::size_t i = 0; i < ass.primes.size(); ++i) {
        primes.push_back({{"prime", prime_names(ass.primes[i], m.names())}, {"minimal", static_cast<bool>(ass.minimal[i])}});
        out.text += prime_text(ass.primes[i], m.names()) + (ass.minimal[i] ? "" : "  embedded") + "\n";
    }
    out.report.data["associated_primes"] = primes;
    if (is_generic(m).is_generic) {
        const SpectrumReport s = check_embedded_spectrum(m, cli.field());
        out.report.add("embedded-prime-spectrum", s.holds());
    }
    return out;
}

Outcome cmd_chains(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("chains", format_ideal(m));
    const ChainReport r = check_saturated_chains(m);
    json chains = json::array();
    for (const auto& [p, chain] : r.chains) {
        json steps = json::array();
        for (const auto& q : chain) steps.push_back(prime_names(q, m.names()));
        chains.push_back({{"prime", prime_names(p, m.names())}, {"chain", steps}});
        out.text += prime_text(p, m.names()) + ": " + (chain.empty() ? "no saturated chain" : steps.dump()) + "\n";
    }
    out.report.data["chains"] = chains;
    out.report.data["holds"] = r.holds();
    if (is_generic(m).is_generic) out.report.add("saturated-chains", r.holds());
    return out;
}

Outcome cmd_connectivity(const Cli& cli) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("connectivity", format_ideal(m));
    const ConnectivityReport r = connectivity_sequence(m);
    json bad = json::array();
    for (const auto& [p, q] : r.disconnected) bad.push_back({prime_names(p, m.names()), prime_names(q, m.names())});
    out.report.data = {{"connected", r.holds()}, {"disconnected", bad}};
    out.text = std::string(r.holds() ? "connected" : "not connected") + "\n";
    if (is_generic(m).is_generic) out.report.add("connectivity-sequence", r.holds());
    return out;
}

Outcome cmd_hvector(const Cli& cli, const std::string& local, bool use_coscarf) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("hvector", format_ideal(m));
    const LabeledComplex gamma = use_coscarf ? co_scarf(m).labeled() : extended_scarf_complex(m).labeled;
    const IntPolynomial h = h_polynomial(gamma.complex, m.num_vars());
    const IntPolynomial hi = h_polynomial_of_faces(interior_faces(gamma), m.num_vars());
    out.report.data["h"] = h.coefficients();
    out.report.data["interior_h"] = hi.coefficients();
    out.text = "h: " + h.to_string() + "\ninterior h: " + hi.to_string() + "\n";
    if (!local.empty()) {
        const VarSet w = variables_named(split_list(local), m.names());
        const IntPolynomial l = local_h(gamma, w);
        out.report.data["local_h"] = l.coefficients();
        out.text += "local h: " + l.to_string() + "\n";
    }
    const LocalHReport r = check_local_h_properties(gamma);
    out.report.add("local-h-decomposition", r.decomposition);
    out.report.add("local-h-symmetric", r.symmetric);
    out.report.add("local-h-nonnegative", r.nonnegative);
    out.report.add("local-h-lower-bound", r.unimodal_bound);
    out.report.add("local-h-interior-vertices", r.interior_vertex_count);
    out.report.add("h-counts-facets", r.facet_count);
    out.report.add("interior-h-reversal", r.interior_reversal);
    return out;
}

TermOrder order_for(const std::string& weights, std::size_t n) {
    TermOrder order = weights.empty() ? TermOrder::revlex(n) : TermOrder::weighted_revlex(parse_integers(weights));
    order.validate(n);
    return order;
}

Outcome cmd_gb(const Cli& cli, const std::string& weights) {
    const BinomialSystem s = cli.binomials();
    Outcome out = cli.begin("gb", format_binomials(s));
    const std::vector<Binomial> gb = buchberger(s.binomials, order_for(weights, s.names.size()));
    json list = json::array();
    for (const Binomial& b : gb) {
        list.push_back(to_string(b, s.names));
        out.text += to_string(b, s.names) + "\n";
    }
    out.report.data["basis"] = list;
    return out;
}

void initial_ideal_checks(RunReport& report, const MonomialIdeal& initial, bool asserted, Field field) {
    const ChainReport chains = check_saturated_chains(initial);
    report.add("saturated-chains", chains.holds());
    const PdBoundReport pd = check_pd_bound(initial, field);
    report.add("proj-dim-bound", pd.holds(), "pd " + std::to_string(pd.proj_dim) + ", bound " + std::to_string(pd.bound));
    const bool codim_two = codim(initial) == 2;
    const ConjectureReport conj = conjecture_report(initial, asserted || codim_two, field);
    report.data["conjecture"] = {{"holds", conj.holds}, {"asserted", conj.asserted}, {"proj_dim", conj.proj_dim},
                                 {"associated_codims", conj.associated_codims}};
    if (conj.asserted) report.add("associated-prime-at-proj-dim", conj.holds);
}

Outcome cmd_inideal(const Cli& cli, const std::string& weights) {
    const BinomialSystem s = cli.binomials();
    Outcome out = cli.begin("inideal", format_binomials(s));
    const TermOrder order = order_for(weights, s.names.size());
    const MonomialIdeal initial = initial_ideal(buchberger(s.binomials, order), order, s.names);
    out.report.data["initial"] = monomial_list_json(initial.generators(), s.names);
    out.text = format_ideal(initial);
    const bool full = std::all_of(s.binomials.begin(), s.binomials.end(), [](const Binomial& b) { return b.has_full_support(); });
    const bool plain = weights.empty();
    if (full && plain) {
        const IngenReport r = check_ingen(s, order, cli.field());
        out.report.data["generic_old"] = r.generic_old;
        out.report.add("initial-ideal-generic", r.generic);
    }
    initial_ideal_checks(out.report, initial, full && plain, cli.field());
    return out;
}

Outcome cmd_census(const Cli& cli, int lo, int hi) {
    const BinomialSystem s = cli.binomials();
    Outcome out = cli.begin("census", format_binomials(s));
    const std::vector<MonomialIdeal> ideals = census_initial_ideals(s, lo, hi);
    json list = json::array();
    bool chains = true, pd_bound = true, conj = true;
    for (const MonomialIdeal& m : ideals) {
        const AssPrimeSet ass = associated_primes(m);
        json embedded = json::array();
        for (const auto& p : ass.embedded()) embedded.push_back(prime_names(p, s.names));
        const bool cm = is_cohen_macaulay(m, cli.field());
        list.push_back({{"generators", monomial_list_json(m.generators(), s.names)}, {"cohen_macaulay", cm},
                        {"embedded_primes", embedded}});
        out.text += ideal_text(m.generators(), s.names) + (cm ? "  CM" : "  not CM") + "\n";
        chains = chains && check_saturated_chains(m).holds();
        pd_bound = pd_bound && check_pd_bound(m, cli.field()).holds();
        if (codim(m) == 2) conj = conj && conjecture_report(m, true, cli.field()).holds;
    }
    out.report.data["initial_ideals"] = list;
    out.report.data["count"] = ideals.size();
    out.report.add("saturated-chains", chains);
    out.report.add("proj-dim-bound", pd_bound);
    out.report.add("associated-prime-at-proj-dim-codim-two", conj);
    return out;
}

Outcome cmd_betti_inequality(const Cli& cli, const Options& o) {
    const MonomialIdeal m = cli.ideal();
    Outcome out = cli.begin("betti-inequality", format_ideal(m));
    const DualContext ctx = context_for(m, o);
    const BettiInequalitySweep sweep = betti_inequality_sweep(m, ctx, cli.field());
    out.report.data = {{"bound", ctx.a.vector()}, {"checked", sweep.checked}, {"equalities", sweep.equalities}};
    std::string witness;
    if (!sweep.holds()) witness = "i=" + std::to_string(sweep.failures.front().first) + " b=" + exponent_string(sweep.failures.front().second);
    out.report.add("betti-inequality-sweep", sweep.holds(), witness);
    return out;
}

Outcome cmd_verify_all(const Cli& cli) {
    Outcome out;
    Config config = cli.config();
    out.report = verify_all(cli.ideal(), config);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic and cogeneric monomial ideals: Scarf complexes, resolutions and theorem checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Print the JSON report");
    app.add_flag("--timing", o.timing, "Record wall-clock time in the report");
    app.add_option("--field", o.field, "Homology field: q or p:<prime>");
    app.add_option("--seed", o.seed, "Random seed, recorded in the report");
    app.add_option("--config", o.config_path, "key=value config file");
    app.add_option("--bound", o.bound, "Alexander duality bound a1,a2,...");

    Cli cli(o);
    std::function<Outcome()> run;
    auto ideal_command = [&](const std::string& name, const std::string& help, std::function<Outcome()> f) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "Input file ('-' for stdin)")->required();
        sub->callback([&run, f] { run = f; });
        return sub;
    };

    ideal_command("check-generic", "Generator-pair genericity test", [&] { return cmd_check_generic(cli); });
    ideal_command("check-cogeneric", "Cogenericity test on the irreducible components", [&] { return cmd_check_cogeneric(cli); });
    ideal_command("scarf", "Scarf complex as JSON", [&] { return cmd_scarf(cli); });
    std::optional<int> big_d;
    ideal_command("extended", "Extended Scarf complex as JSON", [&] { return cmd_extended(cli, big_d); })
        ->add_option("--D", big_d, "Power used for the added x_s^D");
    ideal_command("decompose", "Irreducible decomposition", [&] { return cmd_decompose(cli); });
    ideal_command("stanley-reisner", "Complex of variable sets outside the ideal", [&] { return cmd_stanley_reisner(cli); });
    std::string resolve_kind;
    CLI::App* resolve = app.add_subcommand("resolve", "Free complexes: scarf, taylor or betti");
    resolve->add_option("kind", resolve_kind)->required()->check(CLI::IsMember({"scarf", "taylor", "betti"}));
    resolve->add_option("input", o.input, "Input file ('-' for stdin)")->required();
    resolve->callback([&] { run = [&] { return cmd_resolve(cli, resolve_kind); }; });
    ideal_command("betti", "Betti table from upper Koszul complexes", [&] { return cmd_resolve(cli, "betti"); });
    ideal_command("dual", "Alexander dual", [&] { return cmd_dual(cli, o); });
    bool allow_noncogeneric = false;
    ideal_command("coscarf", "Co-Scarf complex and its resolution shape", [&] { return cmd_coscarf(cli, allow_noncogeneric); })
        ->add_flag("--allow-noncogeneric", allow_noncogeneric, "Build the complex without resolution guarantees");
    ideal_command("depth", "Depth of S/M", [&] { return cmd_depth(cli); });
    ideal_command("cm", "Cohen-Macaulay tests", [&] { return cmd_cm(cli); });
    ideal_command("type", "Cohen-Macaulay type and Gorenstein test", [&] { return cmd_type(cli); });
    ideal_command("ass", "Associated primes", [&] { return cmd_ass(cli); });
    ideal_command("chains", "Saturated chains of associated primes", [&] { return cmd_chains(cli); });
    ideal_command("connectivity", "Connecting sequences between associated primes", [&] { return cmd_connectivity(cli); });
    std::string local;
    bool use_coscarf = false;
    CLI::App* hv = ideal_command("hvector", "h-polynomials of the extended Scarf triangulation",
                                 [&] { return cmd_hvector(cli, local, use_coscarf); });
    hv->add_option("--local", local, "Local h-polynomial for the variables W (comma separated)");
    hv->add_flag("--coscarf", use_coscarf, "Use the co-Scarf complex");
    ideal_command("betti-inequality", "Betti inequality between M and its dual", [&] { return cmd_betti_inequality(cli, o); });
    ideal_command("verify-all", "Every applicable theorem check", [&] { return cmd_verify_all(cli); });

    std::string weights;
    for (const char* name : {"gb", "inideal"}) {
        CLI::App* sub = app.add_subcommand(name, std::string(name) == "gb" ? "Reduced Groebner basis" : "Initial ideal");
        sub->add_option("input", o.input, "Binomial file ('-' for stdin)")->required();
        sub->add_option("--weights", weights, "Weights w1,w2,... (revlex tie-break)");
        const std::string n = name;
        sub->callback([&, n] { run = [&, n] { return n == "gb" ? cmd_gb(cli, weights) : cmd_inideal(cli, weights); }; });
    }
    int lo = 1, hi = 8;
    CLI::App* census = app.add_subcommand("census", "Initial ideals over a box of weight vectors");
    census->add_option("input", o.input, "Binomial file ('-' for stdin)")->required();
    census->add_option("--lo", lo, "Smallest weight")->check(CLI::PositiveNumber);
    census->add_option("--hi", hi, "Largest weight")->check(CLI::PositiveNumber);
    census->callback([&] { run = [&] { return cmd_census(cli, lo, hi); }; });

    std::string kind = "generic";
    CorpusParams params;
    CLI::App* corpus = app.add_subcommand("corpus", "verify-all over a seeded random corpus");
    corpus->add_option("--kind", kind, "any, generic, cogeneric, uniform-generic or bivariate-generic");
    corpus->add_option("--count", params.count, "Number of ideals");
    corpus->add_option("--max-vars", params.max_vars, "Largest number of variables");
    corpus->add_option("--max-generators", params.max_generators, "Largest number of generators");
    corpus->add_option("--max-exponent", params.max_exponent, "Largest exponent");
    corpus->callback([&] {
        run = [&] {
            Outcome out;
            out.report = verify_corpus(parse_corpus_kind(kind), o.seed.value_or(1), params, cli.config());
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const std::string& w : cli.config().warnings) std::cerr << "warning: " << w << "\n";
        const auto start = std::chrono::steady_clock::now();
        Outcome out = run();
        if (o.timing) {
            out.report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        if (o.json) {
            std::cout << out.report.to_json();
        } else {
            std::cout << out.text;
            if (out.text.empty()) {
                std::cout << out.report.to_text();
            } else {
                for (const Verdict& v : out.report.verdicts) {
                    std::cout << "[" << status_name(v.status) << "] " << v.check;
                    if (!v.witness.empty()) std::cout << "  (" << v.witness << ")";
                    std::cout << "\n";
                }
            }
        }
        return out.report.any_failed() ? 1 : 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
