// syzgraph — command-line front end.
//
// Subcommands: graph, betti, check, complex, gen, verify.  Every invocation
// builds one structured JSON report; the human-readable output is rendered
// from that report, so `--json` and the default text view always agree.
// Exit codes: 0 success, 2 input error, 3 cap/resource exhaustion,
// 4 criterion/oracle disagreement (check --method both) or failed verify
// suite.

#include "syzgraph/betti.hpp"
#include "syzgraph/caps.hpp"
#include "syzgraph/errors.hpp"
#include "syzgraph/families.hpp"
#include "syzgraph/field.hpp"
#include "syzgraph/ideal.hpp"
#include "syzgraph/simplicial.hpp"
#include "syzgraph/structure.hpp"
#include "syzgraph/syzygy_graph.hpp"
#include "syzgraph/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace syz;

// ------------------------------------------------------------------ helpers

std::string readInputText(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw input_error("cannot open input file: " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

std::string hexDigest(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

int envPositiveInt(const char* name) {
    const char* e = std::getenv(name);
    if (!e || !*e) return -1;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end == e || *end != '\0' || v <= 0 || v > 1000000)
        throw input_error(std::string(name) + " must be a positive integer, got '" + e + "'");
    return static_cast<int>(v);
}

// Env vars give defaults, flags override.
Caps resolveCaps(int capN, int capM) {
    Caps caps;
    int en = envPositiveInt("SYZGRAPH_CAP_N");
    int em = envPositiveInt("SYZGRAPH_CAP_M");
    if (en > 0) caps.oracleVars = en;
    if (em > 0) {
        caps.scarfGens = em;
        caps.shellFacets = em;
    }
    if (capN > 0) caps.oracleVars = capN;
    if (capM > 0) {
        caps.scarfGens = capM;
        caps.shellFacets = capM;
    }
    return caps;
}

json capsJson(const Caps& caps) {
    json j;
    j["oracleVars"] = caps.oracleVars;
    j["scarfGens"] = caps.scarfGens;
    j["shellFacets"] = caps.shellFacets;
    return j;
}

json gensJson(const MonomialIdeal& I) {
    json a = json::array();
    for (const auto& g : I.gens) a.push_back(g.vars());
    return a;
}

json idealInputJson(const ParsedIdeal& p, const std::string& path) {
    json in;
    in["kind"] = "ideal";
    in["path"] = path;
    in["digest"] = hexDigest(idealDigest(p.ideal));
    in["n"] = p.ideal.n;
    in["m"] = p.ideal.m();
    auto d = p.ideal.uniformDegree();
    in["degree"] = d ? json(*d) : json(nullptr);
    in["wasMinimal"] = p.wasMinimal;
    in["generators"] = gensJson(p.ideal);
    return in;
}

json complexInputJson(const ParsedComplex& p, const std::string& path) {
    json in;
    in["kind"] = "complex";
    in["path"] = path;
    in["digest"] = hexDigest(complexDigest(p.complex));
    in["n"] = p.complex.n;
    in["facets"] = p.complex.facetCount();
    in["dimension"] = p.complex.dimension();
    in["pure"] = p.complex.isPure();
    in["wasIrredundant"] = p.wasIrredundant;
    json fs = json::array();
    for (const auto& f : p.complex.facets) fs.push_back(f.vars());
    in["facetList"] = fs;
    return in;
}

json shapeJson(const GraphShape& s) {
    json j;
    j["tag"] = shapeTagName(s.tag);
    j["cycleLength"] = s.cycleLength;
    j["witness"] = s.witness;
    return j;
}

json edgesJson(const std::vector<std::pair<int, int>>& edges) {
    json a = json::array();
    for (const auto& e : edges) a.push_back({e.first, e.second});
    return a;
}

json graphJson(const SyzygyGraph& g, const GraphShape& shape) {
    json j;
    j["vertices"] = g.graph.verts;
    j["edges"] = edgesJson(g.graph.edges);
    json pruned = json::array();
    for (const auto& p : g.pruned) {
        json rec;
        rec["edge"] = {p.edge.first, p.edge.second};
        rec["triangle"] = {p.triangle[0], p.triangle[1], p.triangle[2]};
        pruned.push_back(rec);
    }
    j["prunedEdges"] = pruned;
    j["shape"] = shapeJson(shape);
    return j;
}

json decompositionJson(const DecompositionTree* t) {
    if (t == nullptr) return nullptr;
    json node;
    node["generators"] = t->genIndices;
    if (t->sheddingVar > 0) {
        node["sheddingVariable"] = t->sheddingVar;
        node["without"] = decompositionJson(t->without.get());
        node["with"] = decompositionJson(t->with.get());
    }
    return node;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string shapeLine(const json& s) {
    std::ostringstream os;
    os << s.at("tag").get<std::string>();
    if (s.at("cycleLength").get<int>() > 0) os << "(" << s.at("cycleLength").get<int>() << ")";
    const auto& w = s.at("witness");
    if (!w.empty()) {
        os << "  [order:";
        for (const auto& v : w) os << ' ' << v.get<int>();
        os << "]";
    }
    return os.str();
}

void renderInputLine(const json& in, std::ostream& os) {
    if (in.at("kind") == "ideal") {
        os << "input: ideal  n=" << in.at("n").get<int>() << "  m=" << in.at("m").get<int>();
        if (!in.at("degree").is_null()) os << "  degree=" << in.at("degree").get<int>();
        if (!in.at("wasMinimal").get<bool>()) os << "  (generators were minimalized)";
    } else {
        os << "input: complex  n=" << in.at("n").get<int>()
           << "  facets=" << in.at("facets").get<int>()
           << "  dim=" << in.at("dimension").get<int>()
           << "  pure=" << yn(in.at("pure").get<bool>());
    }
    os << "  digest=" << in.at("digest").get<std::string>() << '\n';
}

// ------------------------------------------------------- subcommand: graph

json runGraph(const std::string& path) {
    ParsedIdeal parsed = parseIdealText(readInputText(path));
    SyzygyGraph g = buildSyzygyGraph(parsed.ideal);
    GraphShape shape = classifyShape(g);
    LinearRelationsResult rel = hasLinearRelationsCombinatorial(parsed.ideal);

    json report;
    report["command"] = "graph";
    report["input"] = idealInputJson(parsed, path);
    report["graph"] = graphJson(g, shape);
    json rj;
    rj["value"] = rel.value;
    rj["certificate"] =
        rel.certificate ? json({rel.certificate->first, rel.certificate->second}) : json(nullptr);
    report["linearRelations"] = rj;
    return report;
}

void renderGraph(const json& r, std::ostream& os) {
    renderInputLine(r.at("input"), os);
    const json& g = r.at("graph");
    os << "shape: " << shapeLine(g.at("shape")) << '\n';
    os << "vertices: " << g.at("vertices").size() << "  edges: " << g.at("edges").size() << '\n';
    for (const auto& e : g.at("edges")) os << "  " << e[0].get<int>() << " -- " << e[1].get<int>() << '\n';
    const json& pruned = g.at("prunedEdges");
    os << "pruned edges: " << pruned.size() << '\n';
    for (const auto& p : pruned)
        os << "  " << p.at("edge")[0].get<int>() << " -- " << p.at("edge")[1].get<int>()
           << "   (triangle " << p.at("triangle")[0].get<int>() << ' '
           << p.at("triangle")[1].get<int>() << ' ' << p.at("triangle")[2].get<int>() << ")\n";
    const json& rel = r.at("linearRelations");
    os << "linear relations (all pair subgraphs connected): " << yn(rel.at("value").get<bool>());
    if (!rel.at("certificate").is_null())
        os << "   [disconnected pair: (" << rel.at("certificate")[0].get<int>() << ", "
           << rel.at("certificate")[1].get<int>() << ")]";
    os << '\n';
}

// ------------------------------------------------------- subcommand: betti

json runBetti(const std::string& path, const FieldSpec& field, const Caps& caps) {
    ParsedIdeal parsed = parseIdealText(readInputText(path));
    BettiTable table = bettiTable(parsed.ideal, field, caps);

    json report;
    report["command"] = "betti";
    report["input"] = idealInputJson(parsed, path);
    report["caps"] = capsJson(caps);
    json bj;
    bj["field"] = field.label();
    json entries = json::array();
    for (const auto& [ij, b] : table.entries) {
        json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["beta"] = b;
        entries.push_back(e);
    }
    bj["entries"] = entries;
    bj["projectiveDimension"] = table.projectiveDimension();
    auto d = parsed.ideal.uniformDegree();
    bool linear = d.has_value();
    if (d)
        for (const auto& [ij, b] : table.entries)
            if (b > 0 && ij.second != ij.first + *d) linear = false;
    bj["linearResolution"] = linear;
    bj["mixedDegreeWarning"] = !d.has_value();
    report["betti"] = bj;
    return report;
}

void renderBetti(const json& r, std::ostream& os) {
    renderInputLine(r.at("input"), os);
    const json& b = r.at("betti");
    os << "field: " << b.at("field").get<std::string>() << '\n';
    BettiTable table; // reconstructed from the report so the text view derives from it
    for (const auto& e : b.at("entries"))
        table.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<long long>();
    os << renderBettiTable(table);
    os << "projective dimension: " << b.at("projectiveDimension").get<int>() << '\n';
    os << "linear resolution: " << yn(b.at("linearResolution").get<bool>());
    if (b.at("mixedDegreeWarning").get<bool>()) os << "   [warning: mixed generator degrees]";
    os << '\n';
}

// ------------------------------------------------------- subcommand: check

json criterionRecord(const std::string& property, const MonomialIdeal& I, const FieldSpec& field,
                     const Caps& caps) {
    json rec;
    if (property == "linear-resolution") {
        ResolutionDecision dec = decideLinearResolution(I, field, caps);
        rec["value"] = dec.linear;
        rec["rule"] = dec.rule;
        rec["shape"] = shapeJson(dec.shape);
        rec["oracleUsed"] = dec.oracleUsed;
    } else if (property == "linear-quotients") {
        ResolutionDecision dec = decideLinearResolution(I, field, caps);
        if (dec.linearQuotients) {
            rec["value"] = *dec.linearQuotients;
            rec["rule"] = dec.rule;
        } else {
            rec["value"] = findAdmissibleOrder(I).has_value();
            rec["rule"] = "search";
        }
        rec["shape"] = shapeJson(dec.shape);
    } else if (property == "var-decomposable") {
        ResolutionDecision dec = decideLinearResolution(I, field, caps);
        if (dec.variableDecomposable) {
            rec["value"] = *dec.variableDecomposable;
            rec["rule"] = dec.rule;
        } else {
            rec["value"] = isVariableDecomposable(I).value;
            rec["rule"] = "search";
        }
        rec["shape"] = shapeJson(dec.shape);
    } else if (property == "linear-relations") {
        LinearRelationsResult rel = hasLinearRelationsCombinatorial(I);
        rec["value"] = rel.value;
        rec["rule"] = "pair-subgraph-connectivity";
        rec["certificate"] = rel.certificate
                                 ? json({rel.certificate->first, rel.certificate->second})
                                 : json(nullptr);
    } else if (property == "scarf") {
        rec["value"] = scarfMatchesGraph(I, caps);
        rec["rule"] = "scarf-face-match";
    } else {
        throw input_error("unknown property: " + property);
    }
    return rec;
}

json oracleRecord(const std::string& property, const MonomialIdeal& I, const FieldSpec& field,
                  const Caps& caps) {
    json rec;
    if (property == "linear-resolution" || property == "scarf") {
        LinearVerdict v = hasLinearResolution(I, field, caps);
        rec["value"] = v.value;
        rec["rule"] = "betti-table";
        rec["mixedDegreeWarning"] = v.mixedDegreeWarning;
    } else if (property == "linear-quotients") {
        auto order = findAdmissibleOrder(I);
        rec["value"] = order.has_value();
        rec["rule"] = "order-search";
        rec["order"] = order ? json(*order) : json(nullptr);
    } else if (property == "var-decomposable") {
        VarDecompResult v = isVariableDecomposable(I);
        rec["value"] = v.value;
        rec["rule"] = "shedding-search";
        rec["decomposition"] = decompositionJson(v.tree.get());
    } else if (property == "linear-relations") {
        LinearVerdict v = hasLinearRelationsOracle(I, field, caps);
        rec["value"] = v.value;
        rec["rule"] = "betti-table";
        rec["mixedDegreeWarning"] = v.mixedDegreeWarning;
    } else {
        throw input_error("unknown property: " + property);
    }
    return rec;
}

json runCheck(const std::string& path, const std::string& property, const std::string& method,
              const FieldSpec& field, const Caps& caps, int& exitCode) {
    ParsedIdeal parsed = parseIdealText(readInputText(path));
    const MonomialIdeal& I = parsed.ideal;

    json report;
    report["command"] = "check";
    report["input"] = idealInputJson(parsed, path);
    report["caps"] = capsJson(caps);
    report["field"] = field.label();
    json c;
    c["property"] = property;
    c["method"] = method;

    bool wantCriterion = method == "criterion" || method == "auto" || method == "both";
    bool wantOracle = method == "oracle" || method == "both";
    if (wantCriterion) c["criterion"] = criterionRecord(property, I, field, caps);
    if (wantOracle) c["oracle"] = oracleRecord(property, I, field, caps);

    if (method == "both") {
        bool a = c["criterion"]["value"].get<bool>();
        bool b = c["oracle"]["value"].get<bool>();
        c["agreement"] = a == b;
        c["verdict"] = b; // the oracle is ground truth on disagreement
        if (a != b) {
            json d;
            d["criterion"] = a;
            d["oracle"] = b;
            d["property"] = property;
            c["discrepancy"] = d;
            exitCode = 4;
        }
    } else {
        c["verdict"] = wantOracle ? c["oracle"]["value"].get<bool>()
                                  : c["criterion"]["value"].get<bool>();
    }
    report["check"] = c;
    return report;
}

void renderMethodRecord(const char* label, const json& rec, std::ostream& os) {
    os << label << ": " << yn(rec.at("value").get<bool>());
    if (rec.contains("rule")) os << "   (rule: " << rec.at("rule").get<std::string>() << ")";
    if (rec.contains("certificate") && !rec.at("certificate").is_null())
        os << "   [disconnected pair: (" << rec.at("certificate")[0].get<int>() << ", "
           << rec.at("certificate")[1].get<int>() << ")]";
    if (rec.contains("mixedDegreeWarning") && rec.at("mixedDegreeWarning").get<bool>())
        os << "   [warning: mixed generator degrees]";
    os << '\n';
    if (rec.contains("shape")) os << "  shape: " << shapeLine(rec.at("shape")) << '\n';
    if (rec.contains("order") && !rec.at("order").is_null()) {
        os << "  admissible order:";
        for (const auto& v : rec.at("order")) os << ' ' << v.get<int>();
        os << '\n';
    }
}

void renderCheck(const json& r, std::ostream& os) {
    renderInputLine(r.at("input"), os);
    const json& c = r.at("check");
    os << "property: " << c.at("property").get<std::string>()
       << "   method: " << c.at("method").get<std::string>()
       << "   field: " << r.at("field").get<std::string>() << '\n';
    if (c.contains("criterion")) renderMethodRecord("criterion", c.at("criterion"), os);
    if (c.contains("oracle")) renderMethodRecord("oracle", c.at("oracle"), os);
    if (c.contains("agreement"))
        os << "agreement: " << yn(c.at("agreement").get<bool>()) << '\n';
    os << "verdict: " << yn(c.at("verdict").get<bool>()) << '\n';
    if (c.contains("discrepancy"))
        os << "DISCREPANCY: criterion=" << yn(c.at("discrepancy").at("criterion").get<bool>())
           << " oracle=" << yn(c.at("discrepancy").at("oracle").get<bool>()) << '\n';
}

// ----------------------------------------------------- subcommand: complex

json runComplex(const std::string& path, const std::string& what, const FieldSpec& field,
                const Caps& caps) {
    ParsedComplex parsed = parseComplexText(readInputText(path));
    const SimplicialComplex& K = parsed.complex;
    bool pure = K.isPure();

    json report;
    report["command"] = "complex";
    report["input"] = complexInputJson(parsed, path);
    report["caps"] = capsJson(caps);
    report["field"] = field.label();
    json verdicts;
    verdicts["report"] = what;

    auto requirePure = [&](const char* whatFor) {
        if (!pure) throw input_error(std::string(whatFor) + " requires a pure complex");
    };

    bool wantCm = what == "cm" || what == "all";
    bool wantShell = what == "shellable" || what == "all";
    bool wantVd = what == "vertex-decomposable" || what == "all";
    bool wantShape = what == "shape" || what == "all";

    if (wantCm) {
        CmVerdict cm = isCohenMacaulay(K, field, caps);
        json j;
        j["value"] = cm.value;
        j["reason"] = cm.reason;
        verdicts["cohenMacaulay"] = j;
    }
    if (wantShell) {
        if (!pure && what == "all") {
            verdicts["shellable"] = json{{"skipped", "not pure"}};
        } else {
            requirePure("shellability check");
            ShellingResult sh = isShellable(K, caps);
            json j;
            j["value"] = sh.value;
            j["order"] = sh.value ? json(sh.order) : json(nullptr);
            verdicts["shellable"] = j;
        }
    }
    if (wantVd) {
        if (!pure && what == "all") {
            verdicts["vertexDecomposable"] = json{{"skipped", "not pure"}};
        } else {
            requirePure("vertex-decomposability check");
            verdicts["vertexDecomposable"] = json{{"value", isVertexDecomposablePure(K)}};
        }
    }
    if (wantShape) {
        if (!pure && what == "all") {
            verdicts["shape"] = json{{"skipped", "not pure"}};
        } else {
            requirePure("facet-graph shape report");
            CmShapeReport rep = cmShapeReport(K, field, caps);
            IndexGraph fg = facetGraph(K);
            json j;
            j["facetGraph"] = json{{"vertices", fg.verts}, {"edges", edgesJson(fg.edges)}};
            j["shape"] = shapeJson(rep.shape);
            j["viaCorollary"] = rep.viaCorollary;
            j["corollaryCondition"] =
                rep.corollaryCondition ? json(*rep.corollaryCondition) : json(nullptr);
            j["detail"] = rep.detail;
            j["cm"] = rep.cm;
            j["shellable"] = rep.shellable;
            j["vertexDecomposable"] = rep.vertexDecomposable;
            j["stronglyConnected"] = isStronglyConnected(K);
            verdicts["shape"] = j;
        }
    }
    report["complex"] = verdicts;
    return report;
}

void renderComplex(const json& r, std::ostream& os) {
    renderInputLine(r.at("input"), os);
    const json& v = r.at("complex");
    os << "field: " << r.at("field").get<std::string>() << '\n';
    if (v.contains("cohenMacaulay")) {
        const json& cm = v.at("cohenMacaulay");
        os << "Cohen-Macaulay: " << yn(cm.at("value").get<bool>()) << "   (via: "
           << cm.at("reason").get<std::string>() << ")\n";
    }
    if (v.contains("shellable")) {
        const json& sh = v.at("shellable");
        if (sh.contains("skipped")) {
            os << "shellable: skipped (" << sh.at("skipped").get<std::string>() << ")\n";
        } else {
            os << "shellable: " << yn(sh.at("value").get<bool>());
            if (!sh.at("order").is_null()) {
                os << "   [order:";
                for (const auto& x : sh.at("order")) os << ' ' << x.get<int>();
                os << "]";
            }
            os << '\n';
        }
    }
    if (v.contains("vertexDecomposable")) {
        const json& vd = v.at("vertexDecomposable");
        if (vd.contains("skipped"))
            os << "vertex-decomposable: skipped (" << vd.at("skipped").get<std::string>() << ")\n";
        else
            os << "vertex-decomposable: " << yn(vd.at("value").get<bool>()) << '\n';
    }
    if (v.contains("shape")) {
        const json& s = v.at("shape");
        if (s.contains("skipped")) {
            os << "facet-graph shape: skipped (" << s.at("skipped").get<std::string>() << ")\n";
        } else {
            os << "facet graph: " << s.at("facetGraph").at("vertices").size() << " vertices, "
               << s.at("facetGraph").at("edges").size() << " edges   shape: "
               << shapeLine(s.at("shape")) << '\n';
            os << "strongly connected: " << yn(s.at("stronglyConnected").get<bool>()) << '\n';
            if (s.at("viaCorollary").get<bool>()) {
                os << "corollary shape: condition "
                   << yn(s.at("corollaryCondition").get<bool>())
                   << " decides CM = shellable = vertex-decomposable";
                if (!s.at("detail").get<std::string>().empty())
                    os << "   (" << s.at("detail").get<std::string>() << ")";
                os << '\n';
            } else if (!s.at("detail").get<std::string>().empty()) {
                os << "note: " << s.at("detail").get<std::string>() << '\n';
            }
            os << "CM: " << yn(s.at("cm").get<bool>())
               << "   shellable: " << yn(s.at("shellable").get<bool>())
               << "   vertex-decomposable: " << yn(s.at("vertexDecomposable").get<bool>()) << '\n';
        }
    }
}

// --------------------------------------------------------- subcommand: gen

json runGen(const std::string& family, int n, int t, int m, int d, std::uint64_t seed) {
    json report;
    report["command"] = "gen";
    json params;
    params["family"] = family;
    params["n"] = n;

    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw input_error(std::string("gen --family ") + family + ": " + msg);
    };
    need(n > 0, "--n is required and must be positive");

    if (family == "pure-complex") {
        need(m > 0, "--m is required and must be positive");
        params["m"] = m;
        params["seed"] = seed;
        SimplicialComplex K = randomPureComplex(n, m, seed);
        report["params"] = params;
        report["kind"] = "complex";
        report["digest"] = hexDigest(complexDigest(K));
        report["text"] = printComplexText(K);
        return report;
    }

    MonomialIdeal I;
    if (family == "path-cycle") {
        need(t > 0, "--t is required");
        params["t"] = t;
        I = pathIdealCycle(n, t);
    } else if (family == "path-line") {
        need(t > 0, "--t is required");
        params["t"] = t;
        I = pathIdealLine(n, t);
    } else if (family == "cycle") {
        I = cycleFamily(n);
    } else if (family == "random-tree") {
        need(m > 0, "--m is required and must be positive");
        params["m"] = m;
        params["seed"] = seed;
        I = randomTreeIdeal(n, m, seed);
    } else if (family == "random") {
        need(m > 0, "--m is required and must be positive");
        need(d > 0, "--d is required and must be positive");
        params["m"] = m;
        params["d"] = d;
        params["seed"] = seed;
        I = randomIdeal(n, m, d, seed);
    } else {
        throw input_error("unknown family: " + family);
    }
    report["params"] = params;
    report["kind"] = "ideal";
    report["digest"] = hexDigest(idealDigest(I));
    report["text"] = printIdealText(I);
    return report;
}

void renderGen(const json& r, std::ostream& os) {
    // The default output IS the instance text, so `gen ... | syzgraph graph -`
    // works as a pipeline.
    os << r.at("text").get<std::string>();
}

// ------------------------------------------------------ subcommand: verify

json runVerify(const std::string& suite, int count, std::uint64_t seed, const FieldSpec& field,
               const Caps& caps, int& exitCode) {
    SuiteResult res = runSuite(suite, count, seed, field, caps);
    json report;
    report["command"] = "verify";
    report["field"] = field.label();
    report["caps"] = capsJson(caps);
    json v;
    v["suite"] = res.suite;
    v["seed"] = seed;
    v["instances"] = res.instances;
    v["checks"] = res.checks;
    json issues = json::array();
    for (const auto& iss : res.issues) {
        json j;
        j["instance"] = iss.instance;
        j["message"] = iss.message;
        issues.push_back(j);
    }
    v["issues"] = issues;
    v["ok"] = res.ok();
    report["verify"] = v;
    if (!res.ok()) exitCode = 4;
    return report;
}

void renderVerify(const json& r, std::ostream& os) {
    const json& v = r.at("verify");
    os << "suite: " << v.at("suite").get<std::string>() << "   seed: " << v.at("seed").get<std::uint64_t>()
       << "   field: " << r.at("field").get<std::string>() << '\n';
    os << "instances: " << v.at("instances").get<int>()
       << "   checks: " << v.at("checks").get<long long>()
       << "   issues: " << v.at("issues").size() << '\n';
    for (const auto& iss : v.at("issues"))
        os << "  FAIL [" << iss.at("instance").get<std::string>() << "] "
           << iss.at("message").get<std::string>() << '\n';
    os << (v.at("ok").get<bool>() ? "PASS" : "FAIL") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarefree monomial ideals: syzygy graphs, Betti numbers, linear resolutions,\n"
                 "and Cohen-Macaulay complexes via Alexander duality"};
    app.require_subcommand(1);

    std::string fieldSpec = "rat";
    int capN = -1;
    int capM = -1;
    bool asJson = false;
    std::uint64_t seed = 1;

    auto addCommon = [&](CLI::App* sub, bool withSeed) {
        sub->add_option("--field", fieldSpec, "coefficient field: rat | gf:<prime>");
        sub->add_option("--cap-n", capN, "cap on variable count for exact Betti computations");
        sub->add_option("--cap-m", capM, "cap on generator/facet count for search routines");
        sub->add_flag("--json", asJson, "emit the structured JSON report");
        if (withSeed) sub->add_option("--seed", seed, "pseudo-random seed");
    };

    std::string graphInput, bettiInput, checkInput, complexInput;
    CLI::App* cGraph = app.add_subcommand("graph", "syzygy graph, shape, and linear-relations test");
    cGraph->add_option("input", graphInput, "ideal file ('-' for stdin)")->required();
    addCommon(cGraph, false);

    CLI::App* cBetti = app.add_subcommand("betti", "graded Betti numbers via simplicial homology");
    cBetti->add_option("input", bettiInput, "ideal file ('-' for stdin)")->required();
    addCommon(cBetti, false);

    std::string property;
    std::string method = "auto";
    CLI::App* cCheck = app.add_subcommand("check", "decide a property by criterion, oracle, or both");
    cCheck->add_option("input", checkInput, "ideal file ('-' for stdin)")->required();
    cCheck->add_option("--property", property, "linear-resolution | linear-quotients | "
                                               "var-decomposable | linear-relations | scarf")
        ->required()
        ->check(CLI::IsMember({"linear-resolution", "linear-quotients", "var-decomposable",
                               "linear-relations", "scarf"}));
    cCheck->add_option("--method", method, "auto | criterion | oracle | both")
        ->check(CLI::IsMember({"auto", "criterion", "oracle", "both"}));
    addCommon(cCheck, false);

    std::string complexReport = "all";
    CLI::App* cComplex = app.add_subcommand("complex", "Cohen-Macaulay / shellability reports");
    cComplex->add_option("input", complexInput, "complex file ('-' for stdin)")->required();
    cComplex->add_option("--report", complexReport, "cm | shellable | vertex-decomposable | shape | all")
        ->check(CLI::IsMember({"cm", "shellable", "vertex-decomposable", "shape", "all"}));
    addCommon(cComplex, false);

    std::string family;
    int genN = 0, genT = 0, genM = 0, genD = 0;
    CLI::App* cGen = app.add_subcommand("gen", "generate a named instance (prints input-format text)");
    cGen->add_option("--family", family,
                     "path-cycle | path-line | cycle | random-tree | random | pure-complex")
        ->required()
        ->check(CLI::IsMember({"path-cycle", "path-line", "cycle", "random-tree", "random",
                               "pure-complex"}));
    cGen->add_option("--n", genN, "number of variables / vertices");
    cGen->add_option("--t", genT, "path length (path-cycle, path-line)");
    cGen->add_option("--m", genM, "number of generators / facets");
    cGen->add_option("--d", genD, "generator degree (random)");
    addCommon(cGen, true);

    std::string suite;
    int verifyCount = 0;
    CLI::App* cVerify = app.add_subcommand("verify", "run a cross-validation battery");
    cVerify->add_option("--suite", suite, "line | cycle | tree | path-ideals | cm2 | duality")
        ->required()
        ->check(CLI::IsMember(suiteNames()));
    cVerify->add_option("--count", verifyCount, "instance count (0 = suite default)");
    addCommon(cVerify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // unknown flags / bad usage -> 2
    }

    int exitCode = 0;
    try {
        FieldSpec field = parseFieldSpec(fieldSpec);
        Caps caps = resolveCaps(capN, capM);
        auto start = std::chrono::steady_clock::now();

        json report;
        if (cGraph->parsed()) {
            report = runGraph(graphInput);
        } else if (cBetti->parsed()) {
            report = runBetti(bettiInput, field, caps);
        } else if (cCheck->parsed()) {
            report = runCheck(checkInput, property, method, field, caps, exitCode);
        } else if (cComplex->parsed()) {
            report = runComplex(complexInput, complexReport, field, caps);
        } else if (cGen->parsed()) {
            report = runGen(family, genN, genT, genM, genD, seed);
        } else if (cVerify->parsed()) {
            report = runVerify(suite, verifyCount, seed, field, caps, exitCode);
        }

        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (asJson) {
            report["timings"] = json{{"totalMs", ms}};
            std::cout << report.dump(2) << '\n';
        } else {
            if (cGraph->parsed()) renderGraph(report, std::cout);
            else if (cBetti->parsed()) renderBetti(report, std::cout);
            else if (cCheck->parsed()) renderCheck(report, std::cout);
            else if (cComplex->parsed()) renderComplex(report, std::cout);
            else if (cGen->parsed()) renderGen(report, std::cout);
            else if (cVerify->parsed()) renderVerify(report, std::cout);
        }
        return exitCode;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
