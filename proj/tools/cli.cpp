#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "peaks/closedforms.hpp"
#include "peaks/coeffs.hpp"
#include "peaks/counting.hpp"
#include "peaks/equidist.hpp"
#include "peaks/genfunc.hpp"
#include "peaks/oracle.hpp"
#include "peaks/peakcount.hpp"
#include "peaks/peakvalley.hpp"

namespace peaks::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json big(const BigInt& v) { return v.str(); }

json bigs(std::span<const BigInt> v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json positionsJson(std::span<const int> p) { return json(std::vector<int>(p.begin(), p.end())); }

std::string rational(const BigRational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parsed --set: either plain positions or an n-dependent set.
struct SetArg {
    std::vector<int> positions;
    std::optional<SymbolicPeakSet> symbolic;

    std::vector<int> at(std::optional<int> n) const
    {
        if (!symbolic) return positions;
        if (!n) throw UsageError("set " + symbolic->toString() + " needs --n");
        const auto s = symbolic->instantiate(*n);
        return {s.positions().begin(), s.positions().end()};
    }
};

SetArg parseSet(std::string text)
{
    std::erase_if(text, [](char c) { return c == ' ' || c == '{' || c == '}'; });
    SetArg arg;
    if (text.empty()) return arg;
    if (text.find('n') != std::string::npos) {
        try {
            arg.symbolic = SymbolicPeakSet::parse(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad --set: ") + e.what());
        }
        return arg;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size() || v < 1) throw UsageError("bad --set token '" + tok + "'");
        arg.positions.push_back(v);
    }
    std::sort(arg.positions.begin(), arg.positions.end());
    if (std::adjacent_find(arg.positions.begin(), arg.positions.end()) != arg.positions.end()) {
        throw UsageError("bad --set: repeated position");
    }
    return arg;
}

std::string csvCell(const json& v)
{
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    }
    return s;
}

void writeCsv(const json& body, const std::string& rowsKey, std::ostream& os)
{
    std::vector<json> rows;
    if (!rowsKey.empty() && body.contains(rowsKey)) {
        for (const auto& r : body.at(rowsKey)) rows.push_back(r);
    } else {
        rows.push_back(body);
    }
    if (rows.empty()) return;
    std::vector<std::string> header;
    for (const auto& [k, v] : rows.front().items()) header.push_back(k);
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            os << (i ? "," : "");
            if (r.contains(header[i])) os << csvCell(r.at(header[i]));
        }
        os << '\n';
    }
}

struct Payload {
    json body = json::object();
    std::string rowsKey;  // CSV renders this array of records, if set
};

struct Options {
    std::string set;
    std::optional<int> n;
    std::optional<int> s;
    std::optional<int> shift;
    std::optional<int> maxN;
    std::optional<int> maxPeak;
    std::optional<int> terms;
    std::string first = "peak";
    bool showTable = false;
    std::string format = "json";
    unsigned threads = 1;
    std::string outPath;
};

int need(const std::optional<int>& v, const char* flag)
{
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

PeakSet constantSet(const SetArg& arg, std::optional<int> n)
{
    try {
        return PeakSet(arg.at(n));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Payload cmdCount(const Options& o, std::ostream& err)
{
    const int n = need(o.n, "--n");
    if (n < 1) throw UsageError("--n must be positive");
    const auto set = constantSet(parseSet(o.set), n);
    const bool admissible = isAdmissible(set);
    if (!admissible) err << "warning: " << set.toString() << " is not admissible\n";
    Payload p;
    p.body["set"] = positionsJson(set.positions());
    p.body["n"] = n;
    p.body["admissible"] = admissible;
    p.body["count"] = big(countPermutations(set, n));
    const bool live = admissible && n > set.max();
    p.body["polynomial_value"] = big(live ? peakPolynomial(set)(n) : BigInt(0));
    const int e = n - set.size() - 1;
    p.body["power"] = e >= 0 ? big(pow2(e)) : json(nullptr);
    return p;
}

Payload cmdPoly(const Options& o)
{
    const auto arg = parseSet(o.set);
    Payload p;
    if (arg.symbolic) {
        const auto fit = fitSymbolic(*arg.symbolic);
        const auto poly = fit.polynomial.rebased(o.shift.value_or(fit.firstN));
        p.body["shift"] = poly.shift();
        p.body["coeffs"] = bigs(poly.coeffs());
        return p;
    }
    const auto set = constantSet(arg, std::nullopt);
    const auto poly = peakPolynomial(set).rebased(o.shift.value_or(set.max()));
    p.body["shift"] = poly.shift();
    p.body["coeffs"] = bigs(poly.coeffs());
    return p;
}

Payload cmdCoeffs(const Options& o)
{
    const auto set = constantSet(parseSet(o.set), std::nullopt);
    if (set.empty()) throw UsageError("coeffs needs a nonempty --set");
    Payload p;
    p.body["set"] = positionsJson(set.positions());
    p.body["m"] = set.max();
    p.body["admissible"] = isAdmissible(set);
    const auto c = coefficients(set);
    p.body["coeffs"] = bigs(c);
    if (isAdmissible(set) && set.size() <= 2) {
        std::vector<BigInt> closed;
        for (int k = 0; k < set.max(); ++k) closed.push_back(coeffClosedForm(set, k));
        p.body["closed_form"] = bigs(closed);
    }
    return p;
}

Payload cmdGf(const Options& o)
{
    const auto set = constantSet(parseSet(o.set), std::nullopt);
    const auto gf = set.empty() ? emptySetGeneratingFunction() : generatingFunction(set);
    Payload p;
    p.body["set"] = positionsJson(set.positions());
    p.body["numerator"] = gf.numeratorString();
    p.body["denominator"] = "(1 - 2x)^" + std::to_string(gf.denomExponent);
    json terms = json::array();
    for (const auto& [k, c] : gf.numerator) terms.push_back({{"power", k}, {"coeff", big(c)}});
    p.body["terms"] = terms;
    p.rowsKey = "terms";
    return p;
}

Payload cmdSeries(const Options& o)
{
    const auto set = constantSet(parseSet(o.set), std::nullopt);
    const int terms = o.terms.value_or(20);
    if (terms < 1) throw UsageError("--terms must be positive");
    const auto gf = set.empty() ? emptySetGeneratingFunction() : generatingFunction(set);
    const auto series = seriesExpand(gf, terms);
    Payload p;
    p.body["set"] = positionsJson(set.positions());
    json rows = json::array();
    for (int n = 1; n <= terms; ++n) rows.push_back({{"n", n}, {"count", big(series[static_cast<std::size_t>(n - 1)])}});
    p.body["rows"] = rows;
    p.rowsKey = "rows";
    return p;
}

Payload cmdRecurrence(const Options& o)
{
    const auto set = constantSet(parseSet(o.set), std::nullopt);
    const int nMax = o.maxN.value_or(30);
    Payload p;
    p.body["set"] = positionsJson(set.positions());
    p.body["max_n"] = nMax;
    p.body["coefficients"] = bigs(recurrenceCoefficients(set.max()));
    p.body["holds"] = recurrenceCheck(set, nMax);
    return p;
}

Payload cmdOracle(const Options& o)
{
    const int n = need(o.n, "--n");
    auto cfg = OracleConfig::fromEnvironment();
    cfg.threads = o.threads;
    Payload p;
    p.body["n"] = n;
    if (!o.set.empty()) {
        const auto set = constantSet(parseSet(o.set), n);
        p.body["set"] = positionsJson(set.positions());
        p.body["count"] = big(bruteCount(set, n, cfg));
        return p;
    }
    const auto table = bruteDistribution(n, cfg);
    json rows = json::array();
    for (const auto& [set, c] : table.entries()) {
        rows.push_back({{"set", positionsJson(set.positions())}, {"count", big(c)}});
    }
    p.body["rows"] = rows;
    p.body["total"] = big(table.total());
    p.rowsKey = "rows";
    return p;
}

Payload cmdDist(const Options& o)
{
    const int n = need(o.n, "--n");
    if (n < 1) throw UsageError("--n must be positive");
    Payload p;
    p.body["n"] = n;
    json rows = json::array();
    const int lo = o.s.value_or(0);
    const int hi = o.s.value_or((n - 1) / 2);
    for (int s = lo; s <= hi; ++s) {
        for (const auto& [set, c] : distribution(n, s)) {
            rows.push_back({{"set", positionsJson(set.positions())},
                            {"size", s},
                            {"composition", compositionOf(set, n).toString()},
                            {"count", big(c)}});
        }
    }
    p.body["rows"] = rows;
    p.rowsKey = "rows";
    return p;
}

Payload cmdPv(const Options& o)
{
    const int n = need(o.n, "--n");
    if (o.first != "peak" && o.first != "valley") throw UsageError("--first must be peak or valley");
    const auto positions = parseSet(o.set).at(n);
    const bool firstIsPeak = o.first == "peak";
    Payload p;
    p.body["positions"] = positions;
    p.body["first"] = o.first;
    p.body["n"] = n;
    p.body["count"] = big(pvCount(positions, firstIsPeak, n));
    return p;
}

Payload cmdFpeaks(const Options& o)
{
    const int nMax = o.n ? *o.n : o.maxN.value_or(10);
    const int nMin = o.n ? *o.n : 1;
    if (nMin < 1) throw UsageError("--n must be positive");
    const int sMax = o.s.value_or(std::max(0, (nMax - 1) / 2));
    const int sMin = o.s.value_or(0);
    const auto f = fTable(sMax, nMax);
    Payload p;
    json rows = json::array();
    for (int n = nMin; n <= nMax; ++n) {
        for (int s = sMin; s <= sMax; ++s) rows.push_back({{"n", n}, {"s", s}, {"count", big(f(s, n))}});
    }
    p.body["rows"] = rows;
    p.rowsKey = "rows";
    return p;
}

Payload cmdFit(const Options& o)
{
    const auto arg = parseSet(o.set);
    Payload p;
    std::vector<BigInt> samples;
    int firstN = 0;
    if (arg.symbolic) {
        const auto fit = fitSymbolic(*arg.symbolic, o.terms ? std::max(0, *o.terms - expectedSymbolicDegree(*arg.symbolic) - 2) : 3);
        samples = fit.samples;
        firstN = fit.firstN;
    } else {
        const auto set = constantSet(arg, std::nullopt);
        if (!isAdmissible(set)) throw UsageError("fit needs an admissible --set");
        firstN = set.max() + 1;
        const int count = o.terms.value_or(set.max() + 4);
        for (int i = 0; i < count; ++i) samples.push_back(peakPolynomial(set)(firstN + i));
    }
    const int shift = o.shift.value_or(firstN);
    const auto fit = fitPolynomial(samples, firstN, shift);
    p.body["set"] = arg.symbolic ? json(arg.symbolic->toString()) : positionsJson(arg.positions);
    p.body["first_n"] = firstN;
    p.body["shift"] = shift;
    p.body["degree"] = fit.polynomial.degree();
    p.body["coeffs"] = bigs(fit.polynomial.coeffs());
    p.body["samples"] = bigs(samples);
    if (o.showTable) {
        json table = json::array();
        for (std::size_t k = 0; k < fit.differenceTable.size(); ++k) {
            table.push_back({{"order", k}, {"values", bigs(fit.differenceTable[k])}});
        }
        p.body["table"] = table;
        p.rowsKey = "table";
    }
    return p;
}

Payload cmdScanPositivity(const Options& o)
{
    const int maxPeak = o.maxPeak.value_or(11);
    if (maxPeak < 2) throw UsageError("--max-peak must be at least 2");
    const auto r = positivityScan(maxPeak, o.threads);
    Payload p;
    p.body["max_peak"] = maxPeak;
    p.body["sets_examined"] = r.setsExamined;
    json v = json::array();
    for (const auto& c : r.violations) {
        v.push_back({{"set", positionsJson(c.set.positions())}, {"k", c.k}, {"value", big(c.value)}});
    }
    p.body["violations"] = v;
    json c0 = json::array();
    for (const auto& s : r.constantTermFailures) c0.push_back(s.toString());
    json lead = json::array();
    for (const auto& s : r.leadingTermFailures) lead.push_back(s.toString());
    p.body["constant_term_failures"] = c0;
    p.body["leading_term_failures"] = lead;
    p.body["clean"] = r.clean();
    return p;
}

Payload cmdScanEquidist(const Options& o, std::ostream& err)
{
    const int nMax = o.maxN.value_or(13);
    const int nMin = o.n.value_or(2);
    if (nMin < 2 || nMax < nMin) throw UsageError("need 2 <= --n <= --max-n");
    Payload p;
    json rows = json::array();
    std::size_t anomalies = 0;
    for (int n = nMin; n <= nMax; ++n) {
        const auto r = checkEquidistribution(n, o.threads);
        json maxim = json::array();
        for (const auto& s : r.globalMaximizers) maxim.push_back(s.toString());
        rows.push_back({{"n", n},
                        {"confirmed", r.confirmed()},
                        {"global_max", big(r.globalMax)},
                        {"global_maximizers", maxim},
                        {"threes_available", r.threesAvailable},
                        {"threes_attained", r.threesAttained},
                        {"anomalies", r.anomalies},
                        {"notes", r.notes}});
        anomalies += r.anomalies.size();
        for (const auto& a : r.anomalies) err << "anomaly: " << a << '\n';
    }
    p.body["max_n"] = nMax;
    p.body["anomalies"] = anomalies;
    p.body["rows"] = rows;
    p.rowsKey = "rows";
    return p;
}

Payload cmdMeanPart(const Options& o)
{
    const int nMax = o.n ? *o.n : o.maxN.value_or(20);
    const int nMin = o.n ? *o.n : 2;
    if (nMin < 2) throw UsageError("--n must be at least 2");
    Payload p;
    json rows = json::array();
    for (int n = nMin; n <= nMax; ++n) {
        const auto m = meanPartSize(n);
        rows.push_back({{"n", n},
                        {"unweighted", rational(m.unweighted)},
                        {"unweighted_approx", m.unweighted.convert_to<double>()},
                        {"weighted", rational(m.permutationWeighted)},
                        {"weighted_approx", m.permutationWeighted.convert_to<double>()}});
    }
    p.body["rows"] = rows;
    p.rowsKey = "rows";
    return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of permutations by peak set"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--out", o.outPath, "also write the payload to this file");

    auto setOpt = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--set", o.set, "comma-separated positions, n-<k> allowed");
        if (required) opt->required();
    };
    auto nOpt = [&](CLI::App* c) { c->add_option("--n", o.n, "permutation length"); };

    auto* count = app.add_subcommand("count", "#P(S;n) with its polynomial factor");
    setOpt(count, true);
    nOpt(count);
    auto* poly = app.add_subcommand("poly", "peak polynomial coefficients");
    setOpt(poly, true);
    poly->add_option("--shift", o.shift, "basis shift");
    auto* coeffs = app.add_subcommand("coeffs", "coefficients in the C(n - max S, k) basis");
    setOpt(coeffs, true);
    auto* gf = app.add_subcommand("gf", "rational generating function");
    setOpt(gf, true);
    auto* series = app.add_subcommand("series", "generating function coefficients");
    setOpt(series, true);
    series->add_option("--terms", o.terms, "number of coefficients");
    auto* rec = app.add_subcommand("recurrence-check", "linear recurrence on the counts");
    setOpt(rec, true);
    rec->add_option("--max-n", o.maxN, "largest n checked");
    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration");
    setOpt(oracle, false);
    nOpt(oracle);
    auto* dist = app.add_subcommand("dist", "counts of every admissible set");
    nOpt(dist);
    dist->add_option("--s", o.s, "set size");
    auto* pv = app.add_subcommand("pv", "prescribed peaks and valleys");
    setOpt(pv, true);
    nOpt(pv);
    pv->add_option("--first", o.first, "peak or valley");
    auto* fpeaks = app.add_subcommand("fpeaks", "permutations by number of peaks");
    nOpt(fpeaks);
    fpeaks->add_option("--s", o.s, "number of peaks");
    fpeaks->add_option("--max-n", o.maxN, "largest n");
    auto* fit = app.add_subcommand("fit", "finite-difference fit");
    setOpt(fit, true);
    fit->add_option("--shift", o.shift, "basis shift");
    fit->add_option("--terms", o.terms, "number of samples");
    fit->add_flag("--show-table", o.showTable, "include the difference table");
    auto* scan = app.add_subcommand("scan", "scans over many sets");
    scan->require_subcommand(1);
    auto* positivity = scan->add_subcommand("positivity", "sign of every coefficient");
    positivity->add_option("--max-peak", o.maxPeak, "largest max S");
    auto* equidist = scan->add_subcommand("equidist", "which sets maximize the count");
    equidist->add_option("--max-n", o.maxN, "largest n");
    nOpt(equidist);
    auto* meanPart = app.add_subcommand("mean-part", "mean part size of kappa(S)");
    nOpt(meanPart);
    meanPart->add_option("--max-n", o.maxN, "largest n");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    positivity->fallthrough();
    equidist->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Payload payload;
    try {
        if (*count) payload = cmdCount(o, err);
        else if (*poly) payload = cmdPoly(o);
        else if (*coeffs) payload = cmdCoeffs(o);
        else if (*gf) payload = cmdGf(o);
        else if (*series) payload = cmdSeries(o);
        else if (*rec) payload = cmdRecurrence(o);
        else if (*oracle) payload = cmdOracle(o);
        else if (*dist) payload = cmdDist(o);
        else if (*pv) payload = cmdPv(o);
        else if (*fpeaks) payload = cmdFpeaks(o);
        else if (*fit) payload = cmdFit(o);
        else if (*positivity) payload = cmdScanPositivity(o);
        else if (*equidist) payload = cmdScanEquidist(o, err);
        else if (*meanPart) payload = cmdMeanPart(o);
    } catch (const OracleRefusal& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const FitError& e) {
        err << "fit failed: " << e.what() << '\n';
        return kRefused;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ostringstream text;
    if (o.format == "csv") writeCsv(payload.body, payload.rowsKey, text);
    else text << payload.body.dump() << '\n';
    out << text.str();
    if (!o.outPath.empty()) {
        std::ofstream file(o.outPath, std::ios::binary);
        if (!file || !(file << text.str())) {
            err << "error: cannot write " << o.outPath << '\n';
            return kUsage;
        }
    }
    return kOk;
}

}  // namespace peaks::cli
