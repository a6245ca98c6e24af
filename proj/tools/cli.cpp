#include "cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plates/expansion.hpp"
#include "plates/oracle.hpp"
#include "plates/repr.hpp"
#include "plates/translation.hpp"
#include "plates/worpitzky.hpp"

namespace plates::cli {

using nlohmann::json;

namespace {

constexpr int kSchema = 1;

// Size limits (in r^{n-1}) for the engines that build full matrices.
constexpr unsigned long kOracleLimit = 4096;
constexpr unsigned long kPlateEngineLimit = 1024;
constexpr unsigned long kTranslationLimit = 100000;
constexpr unsigned long kRelationsLimit = 256;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int r = 0;
    int r_max = 0;
    std::uint64_t seed = 0;
    int denominator = 0;
    std::size_t batch = 0;
    bool json_output = false;
    std::string method = "both";
    std::string engine = "formula";
    std::string suite = "all";
    std::string plate;
    std::string perm;
    int rows = 5;
};

// ---------------------------------------------------------------------------
// JSON encoders

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rational_json(const Rational& q) {
    if (q.is_integer()) return integer_json(q.numerator());
    return q.str();
}

json cyclotomic_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& a : c.coefficients()) coeffs.push_back(a.str());
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

json plate_json(const Plate& p) { return {{"n", p.n()}, {"blocks", p.blocks()}, {"positions", p.positions()}}; }

json point_json(const RationalPoint& x) {
    json out = json::array();
    for (const auto& xi : x) out.push_back(xi.str());
    return out;
}

json vector_json(const PlateVector& v) {
    json out = json::array();
    for (const auto& [p, c] : v.terms()) out.push_back({{"plate", plate_json(p)}, {"coefficient", cyclotomic_json(c)}});
    return out;
}

json class_function_json(const ClassFunction& f) {
    json out = json::array();
    for (const auto& [type, value] : f.values()) out.push_back({{"class", type.str()}, {"value", rational_json(value)}});
    return out;
}

json oracle_json(std::size_t rank, std::size_t points_used, const json& witnesses = json::array()) {
    return {{"rank", rank}, {"points_used", points_used}, {"witnesses", witnesses}};
}

// ---------------------------------------------------------------------------
// Helpers

unsigned long power(int r, int e) {
    unsigned long out = 1;
    for (int i = 0; i < e; ++i) {
        out *= static_cast<unsigned long>(r);
        if (out > (1UL << 40)) return out;
    }
    return out;
}

void require_nr(const Options& o) {
    if (o.n < 1 || o.n > 12) throw UsageError("--n must lie in 1..12");
    if (o.r < 1 || o.r > 64) throw UsageError("--r must lie in 1..64");
}

SamplePlan make_plan(const Options& o, int n, int r) {
    SamplePlan plan = SamplePlan::defaults(n, r);
    plan.seed = o.seed;
    if (o.denominator != 0) plan.denominator = o.denominator;
    if (o.batch != 0) plan.batch = o.batch;
    try {
        plan.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return plan;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << " s";
    return os.str();
}

void emit(std::ostream& out, json body) {
    body["schema"] = kSchema;
    out << body.dump(2) << '\n';
}

struct ParsedPlate {
    Plate plate;
    bool q = false;
};

ParsedPlate parse_plate_arg(const Options& o) {
    if (o.plate.empty()) throw UsageError("--plate is required");
    std::string_view text = o.plate;
    bool q = false;
    if (!text.empty() && text.front() == 'q') {
        q = true;
        text.remove_prefix(1);
    }
    return {Plate::parse(text, o.n), q};
}

// ---------------------------------------------------------------------------
// expand / act

PlateVector oracle_expansion(const Plate& p, bool q, const BasisSolver& solver) {
    if (!q) return oracle_expand(p, solver);
    PlateVector out(p.n(), p.total());
    for (const auto& term : qplate(p).expansion) out += term.weight * oracle_expand(term.plate, solver);
    return out;
}

int cmd_expand(const Options& o, std::ostream& out) {
    if (o.method != "shuffle" && o.method != "oracle" && o.method != "both") {
        throw UsageError("--method must be shuffle, oracle or both");
    }
    const auto [p, q] = parse_plate_arg(o);
    const int n = p.n(), r = p.total();
    const std::string label = (q ? "q" : "") + p.str();

    json body{{"command", "expand"}, {"plate", plate_json(p)}, {"qplate", q}, {"method", o.method}, {"n", n}, {"r", r}};
    std::optional<PlateVector> shuffle, oracle;
    if (o.method != "oracle") {
        shuffle = q ? qplate_expand(p) : expand(p);
        body["shuffle"] = vector_json(*shuffle);
    }
    std::optional<BasisSolver> solver;
    if (o.method != "shuffle") {
        if (power(r, n - 1) > kOracleLimit) throw UsageError("the oracle method is limited to r^(n-1) <= 4096");
        solver.emplace(standard_basis(n, r), make_plan(o, n, r));
        try {
            oracle = oracle_expansion(p, q, *solver);
        } catch (const NotInSpan& e) {
            body["oracle"] = oracle_json(solver->basis().size(), solver->points_used());
            body["error"] = e.what();
            if (o.json_output) {
                emit(out, body);
            } else {
                out << label << ": " << e.what() << '\n';
            }
            return kVerificationFailed;
        }
        body["expansion"] = vector_json(*oracle);
    }

    bool agree = true;
    json witnesses = json::array();
    if (shuffle && oracle) {
        agree = *shuffle == *oracle;
        body["agree"] = agree;
        if (!agree) {
            // Locate a point where the shuffle expansion and the plate differ.
            PlateCombination lhs = q ? qplate(p).expansion : combination(r, {{1, p}});
            const auto check = verify_identity_ae(lhs, shuffle->to_combination(), make_plan(o, n, r));
            if (check.witness) witnesses.push_back(point_json(*check.witness));
        }
    }
    if (solver) body["oracle"] = oracle_json(solver->basis().size(), solver->points_used(), witnesses);
    if (!oracle) body["expansion"] = body["shuffle"];

    if (o.json_output) {
        emit(out, body);
    } else {
        const PlateVector& shown = oracle ? *oracle : *shuffle;
        out << label << " = " << shown.str() << '\n';
        if (shuffle && oracle) {
            out << "shuffle and oracle " << (agree ? "agree" : "DISAGREE") << " (" << solver->points_used()
                << " sample points)\n";
            if (!agree) out << "shuffle: " << shuffle->str() << '\n';
        }
    }
    return agree ? kPass : kVerificationFailed;
}

int cmd_act(const Options& o, std::ostream& out) {
    const auto [p, q] = parse_plate_arg(o);
    if (o.perm.empty()) throw UsageError("--perm is required");
    const Permutation sigma = Permutation::parse(o.perm, p.n());
    const PlateVector image = q ? apply_permutation(sigma, qplate_expand(p)) : expand(apply_permutation(sigma, p));
    json body{{"command", "act"},
              {"perm", sigma.cycle_notation()},
              {"plate", plate_json(p)},
              {"qplate", q},
              {"image", plate_json(apply_permutation(sigma, p))},
              {"expansion", vector_json(image)}};
    if (o.json_output) {
        emit(out, body);
    } else {
        out << sigma.cycle_notation() << " . " << (q ? "q" : "") << p.str() << " = " << image.str() << '\n';
    }
    return kPass;
}

// ---------------------------------------------------------------------------
// characters

ClassFunction engine_character(const std::string& engine, int n, int r) {
    if (engine == "formula") return formula_character(n, r);
    if (engine == "plates") {
        if (power(r, n - 1) > kPlateEngineLimit) throw UsageError("the plates engine is limited to r^(n-1) <= 1024");
        return plate_character(n, r);
    }
    if (engine == "translation") {
        if (power(r, n - 1) > kTranslationLimit) throw UsageError("the translation engine is limited to r^(n-1) <= 100000");
        return ClassFunction::from(n, [&](const CycleType& type) {
            return ta_trace(Permutation::from_cycle_type(type), r).to_rational();
        });
    }
    if (engine == "diophantine") {
        return ClassFunction::from(n, [&](const CycleType& type) { return Rational(diophantine_count(type, r)); });
    }
    throw UsageError("--engine must be plates, translation, diophantine or formula");
}

int cmd_character(const Options& o, std::ostream& out) {
    require_nr(o);
    const ClassFunction chi = engine_character(o.engine, o.n, o.r);
    if (o.json_output) {
        emit(out, {{"command", "character"}, {"engine", o.engine}, {"n", o.n}, {"r", o.r}, {"values", class_function_json(chi)}});
    } else {
        for (const auto& [type, value] : chi.values()) out << type.str() << ": " << value.str() << '\n';
    }
    return kPass;
}

int cmd_multiplicities(const Options& o, std::ostream& out) {
    require_nr(o);
    const ClassFunction chi = engine_character(o.engine, o.n, o.r);
    const auto mult = multiplicities(chi);
    Integer dim = 0;
    json rows = json::array();
    for (const auto& [mu, m] : mult) {
        const Integer d = mn_character(mu).degree().numerator();
        dim += m * d;
        rows.push_back({{"partition", mu.str()}, {"multiplicity", integer_json(m)}, {"dimension", integer_json(d)}});
    }
    const bool audit = Rational(dim) == chi.degree();
    if (o.json_output) {
        emit(out, {{"command", "multiplicities"},
                   {"engine", o.engine},
                   {"n", o.n},
                   {"r", o.r},
                   {"irreducibles", rows},
                   {"total_dimension", integer_json(dim)},
                   {"dimension_audit", audit}});
    } else {
        for (const auto& [mu, m] : mult) {
            if (m != 0) out << mu.str() << ": " << m.get_str() << '\n';
        }
        out << "dimension " << dim.get_str() << (audit ? " (audit ok)" : " (AUDIT FAILED)") << '\n';
    }
    return audit ? kPass : kVerificationFailed;
}

int cmd_eulerian(const Options& o, std::ostream& out) {
    if (o.rows < 1 || o.rows > 60) throw UsageError("--rows must lie in 1..60");
    json rows = json::array();
    for (int n = 1; n <= o.rows; ++n) {
        json row = json::array();
        std::string line;
        for (const auto& e : eulerian_row(n)) {
            row.push_back(integer_json(e));
            line += (line.empty() ? "" : " ") + e.get_str();
        }
        rows.push_back(row);
        if (!o.json_output) out << line << '\n';
    }
    if (o.json_output) emit(out, {{"command", "eulerian"}, {"rows", rows}});
    return kPass;
}

int cmd_dims(const Options& o, std::ostream& out) {
    require_nr(o);
    if (power(o.r, o.n - 1) > kOracleLimit) throw UsageError("dims is limited to r^(n-1) <= 4096");
    const auto basis = standard_basis(o.n, o.r);
    const unsigned long expected = power(o.r, o.n - 1);
    const auto report = rank_of_span(basis, make_plan(o, o.n, o.r));
    const bool ok = basis.size() == expected && report.rank == basis.size();
    if (o.json_output) {
        emit(out, {{"command", "dims"},
                   {"n", o.n},
                   {"r", o.r},
                   {"basis_size", basis.size()},
                   {"expected", expected},
                   {"oracle", oracle_json(report.rank, report.points_used)},
                   {"ok", ok}});
    } else {
        out << "standard basis: " << basis.size() << " (r^(n-1) = " << expected << ")\n";
        out << "oracle rank: " << report.rank << " from " << report.points_used << " points\n";
    }
    return ok ? kPass : kVerificationFailed;
}

int cmd_qbasis(const Options& o, std::ostream& out) {
    require_nr(o);
    if (power(o.r, o.n - 1) > kPlateEngineLimit) throw UsageError("qbasis is limited to r^(n-1) <= 1024");
    const auto basis = standard_basis(o.n, o.r);
    const auto m = qbasis_matrix(o.n, o.r);
    const bool invertible = is_invertible(m);
    if (o.json_output) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_json(m(i, j)));
            rows.push_back(row);
        }
        json b = json::array();
        for (const auto& p : basis) b.push_back(plate_json(p));
        emit(out, {{"command", "qbasis"}, {"n", o.n}, {"r", o.r}, {"basis", b}, {"matrix", rows}, {"invertible", invertible}});
    } else {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out << "q" << basis[i].str() << " =";
            for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << m(i, j).str();
            out << '\n';
        }
        out << (invertible ? "invertible" : "NOT invertible") << '\n';
    }
    return invertible ? kPass : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::string summary;
    json details = json::object();
    json failures = json::array();
    double seconds = 0;
};

SuiteResult suite_cyclic_sum(const Options& o) {
    SuiteResult s;
    s.name = "cyclic-sum";
    const std::vector<int> all_letters = [&] {
        std::vector<int> v;
        for (int i = 1; i <= o.n; ++i) v.push_back(i);
        return v;
    }();
    const Plate whole(o.n, std::vector<Lump>{Lump{all_letters, o.r}});
    const auto lhs = combination(o.r, {{1, whole}});
    std::size_t checked = 0, points = 0;
    for (const auto& p : all_plates(o.n, o.r)) {
        std::vector<std::pair<long, Plate>> rotations;
        for (std::size_t t = 0; t < p.size(); ++t) rotations.emplace_back(1, rotate(p, static_cast<long>(t)));
        const auto check = verify_identity_ae(lhs, combination(o.r, rotations), make_plan(o, o.n, o.r));
        ++checked;
        points += check.points_used;
        if (!check.holds) {
            s.ok = false;
            s.failures.push_back({{"plate", plate_json(p)}, {"witness", point_json(*check.witness)}});
        }
    }
    s.details = {{"identities", checked}, {"points_used", points}};
    s.summary = std::to_string(checked) + " identities";
    return s;
}

SuiteResult suite_relations(const Options& o) {
    SuiteResult s;
    s.name = "relations";
    if (power(o.r, o.n - 1) > kRelationsLimit) throw UsageError("the relations suite is limited to r^(n-1) <= 256");
    const BasisSolver solver(standard_basis(o.n, o.r), make_plan(o, o.n, o.r));
    std::size_t checked = 0;
    for (const auto& p : all_plates(o.n, o.r)) {
        ++checked;
        const PlateVector shuffle = expand(p);
        const PlateVector oracle = oracle_expand(p, solver);
        if (shuffle == oracle) continue;
        s.ok = false;
        json failure{{"plate", plate_json(p)}, {"shuffle", vector_json(shuffle)}, {"oracle", vector_json(oracle)}};
        const auto check = verify_identity_ae(combination(o.r, {{1, p}}), shuffle.to_combination(), make_plan(o, o.n, o.r));
        if (check.witness) failure["witness"] = point_json(*check.witness);
        s.failures.push_back(failure);
    }
    s.details = {{"plates", checked}, {"oracle", oracle_json(solver.basis().size(), solver.points_used())}};
    s.summary = std::to_string(checked) + " plates, shuffle = oracle";
    return s;
}

SuiteResult suite_worpitzky(const Options& o) {
    SuiteResult s;
    s.name = "worpitzky";
    const int r_max = o.r_max != 0 ? o.r_max : 2 * o.n;
    if (o.n < 2) throw UsageError("the worpitzky suite needs --n >= 2");
    if (r_max < o.n) throw UsageError("--rmax must be at least --n");
    const auto report = verify_categorified_worpitzky(o.n, r_max);
    s.ok = report.ok();
    json dims = json::array(), eulerian_dims = json::array(), b = json::array();
    for (const auto& d : report.dimensions) dims.push_back(integer_json(d));
    for (const auto& d : report.eulerian_dimensions) eulerian_dims.push_back(integer_json(d));
    for (const auto& chi : report.hypersimplex) b.push_back(class_function_json(chi));
    for (const auto& res : report.residuals) {
        s.failures.push_back({{"r", res.r}, {"class", res.type.str()}, {"lhs", rational_json(res.lhs)}, {"rhs", rational_json(res.rhs)}});
    }
    for (const auto& f : report.failures) {
        if (f.rfind("categorified", 0) != 0) s.failures.push_back({{"message", f}});
    }
    s.details = {{"r_max", r_max}, {"dimensions", dims}, {"eulerian", eulerian_dims}, {"hypersimplex", b}};
    std::string dim_str;
    for (const auto& d : report.dimensions) dim_str += (dim_str.empty() ? "" : ",") + d.get_str();
    s.summary = "r <= " + std::to_string(r_max) + ", hypersimplex dimensions " + dim_str;
    return s;
}

SuiteResult suite_idempotents(const Options& o) {
    SuiteResult s;
    s.name = "idempotents";
    const auto report = verify_partition_of_unity(o.n, o.r, o.seed);
    s.ok = report.ok();
    for (const auto& f : report.failures) s.failures.push_back({{"message", f}});
    s.details = {{"checked_pairs", report.checked_pairs}, {"exhaustive", report.exhaustive}};
    s.summary = std::to_string(report.checked_pairs) + (report.exhaustive ? " pairs (exhaustive)" : " pairs (sampled)");
    return s;
}

SuiteResult suite_characters(const Options& o) {
    SuiteResult s;
    s.name = "characters";
    std::vector<std::string> engines{"formula", "diophantine"};
    if (power(o.r, o.n - 1) <= kTranslationLimit) engines.emplace_back("translation");
    if (power(o.r, o.n - 1) <= kPlateEngineLimit) engines.emplace_back("plates");
    std::map<std::string, ClassFunction> values;
    for (const auto& e : engines) values.emplace(e, engine_character(e, o.n, o.r));
    const ClassFunction& reference = values.at("formula");
    for (const auto& [engine, chi] : values) {
        for (const auto& [type, value] : chi.values()) {
            if (value == reference(type)) continue;
            s.ok = false;
            s.failures.push_back({{"engine", engine}, {"class", type.str()}, {"value", rational_json(value)}, {"formula", rational_json(reference(type))}});
        }
    }
    json used = json::array();
    for (const auto& [engine, chi] : values) used.push_back(engine);
    s.details = {{"engines", used}, {"values", class_function_json(reference)}};
    s.summary = std::to_string(engines.size()) + " engines agree on " + std::to_string(reference.values().size()) + " classes";
    return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require_nr(o);
    static const std::map<std::string, std::function<SuiteResult(const Options&)>> suites{
        {"characters", suite_characters}, {"cyclic-sum", suite_cyclic_sum}, {"idempotents", suite_idempotents},
        {"relations", suite_relations},   {"worpitzky", suite_worpitzky},
    };
    std::vector<std::string> chosen;
    if (o.suite == "all") {
        for (const auto& [name, fn] : suites) {
            if (name == "worpitzky" && o.n < 2) continue;
            if (name == "relations" && power(o.r, o.n - 1) > kRelationsLimit) continue;
            chosen.push_back(name);
        }
    } else if (suites.count(o.suite) != 0) {
        chosen.push_back(o.suite);
    } else {
        throw UsageError("--suite must be cyclic-sum, relations, worpitzky, idempotents, characters or all");
    }

    bool ok = true;
    json results = json::array();
    for (const auto& name : chosen) {
        Timer timer;
        SuiteResult s = suites.at(name)(o);
        s.seconds = timer.seconds();
        ok = ok && s.ok;
        results.push_back({{"suite", s.name}, {"ok", s.ok}, {"details", s.details}, {"failures", s.failures}});
        if (!o.json_output) {
            out << (s.ok ? "[PASS] " : "[FAIL] ") << s.name << " (n=" << o.n << ", r=" << o.r << "): " << s.summary
                << ", " << format_seconds(s.seconds) << '\n';
            for (const auto& f : s.failures) out << "  " << f.dump() << '\n';
        }
    }
    if (o.json_output) {
        emit(out, {{"command", "verify"}, {"n", o.n}, {"r", o.r}, {"seed", o.seed}, {"ok", ok}, {"suites", results}});
    }
    return ok ? kPass : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Plates on dilated simplices: expansions, characters and verification suites", "plates"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    auto add_common = [&](CLI::App* sub, bool nr) {
        if (nr) {
            sub->add_option("--n", o.n, "number of coordinates")->required();
            sub->add_option("--r", o.r, "dilation (total of the positions)")->required();
        }
        sub->add_option("--seed", o.seed, "sampling seed")->default_val(0);
        sub->add_option("--denominator", o.denominator, "sample denominator, a prime > n (default: first prime > 2n)");
        sub->add_option("--batch", o.batch, "sample batch size (default: max(16, 2 r^(n-1)))");
        sub->add_flag("--json", o.json_output, "machine-readable output");
    };

    auto* expand_cmd = app.add_subcommand("expand", "standard-basis expansion of a plate or q-plate");
    add_common(expand_cmd, false);
    expand_cmd->add_option("--plate", o.plate, "plate, e.g. [[{2}_1 {1}_1]]; prefix q for a q-plate")->required();
    expand_cmd->add_option("--n", o.n, "number of letters (default: inferred)");
    expand_cmd->add_option("--method", o.method, "shuffle, oracle or both")->default_val("both");

    auto* act_cmd = app.add_subcommand("act", "apply a permutation to a plate and expand");
    add_common(act_cmd, false);
    act_cmd->add_option("--plate", o.plate, "plate or q-plate")->required();
    act_cmd->add_option("--perm", o.perm, "permutation, e.g. (1 2) or [2,1,3]")->required();
    act_cmd->add_option("--n", o.n, "number of letters (default: inferred)");

    auto* character_cmd = app.add_subcommand("character", "character of the plate representation");
    add_common(character_cmd, true);
    character_cmd->add_option("--engine", o.engine, "plates, translation, diophantine or formula")->default_val("formula");

    auto* mult_cmd = app.add_subcommand("multiplicities", "decomposition into irreducibles");
    add_common(mult_cmd, true);
    mult_cmd->add_option("--engine", o.engine, "plates, translation, diophantine or formula")->default_val("formula");

    auto* eulerian_cmd = app.add_subcommand("eulerian", "rows of the Eulerian triangle");
    add_common(eulerian_cmd, false);
    eulerian_cmd->add_option("--rows", o.rows, "number of rows")->default_val(5);

    auto* dims_cmd = app.add_subcommand("dims", "standard-basis count and oracle rank");
    add_common(dims_cmd, true);

    auto* qbasis_cmd = app.add_subcommand("qbasis", "q-plate change-of-basis matrix");
    add_common(qbasis_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--suite", o.suite, "cyclic-sum, relations, worpitzky, idempotents, characters or all")
        ->default_val("all");
    verify_cmd->add_option("--rmax", o.r_max, "largest r for the worpitzky suite (default 2n)");

    std::vector<const char*> argv{"plates"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(o, out);
        if (act_cmd->parsed()) return cmd_act(o, out);
        if (character_cmd->parsed()) return cmd_character(o, out);
        if (mult_cmd->parsed()) return cmd_multiplicities(o, out);
        if (eulerian_cmd->parsed()) return cmd_eulerian(o, out);
        if (dims_cmd->parsed()) return cmd_dims(o, out);
        if (qbasis_cmd->parsed()) return cmd_qbasis(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotACharacter& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const SamplingError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace plates::cli
