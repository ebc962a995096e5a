#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "wkb/classical_cech.hpp"
#include "wkb/json_io.hpp"

using namespace wkb;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// spawn the tool, capture stdout, swallow stderr
RunResult run_tool(const std::string& args) {
    std::string cmd = std::string(WKBTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::filesystem::path& work_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("wkbtool_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_json(const std::string& name, const Json& j) {
    auto p = work_dir() / name;
    std::ofstream f(p);
    f << j.dump();
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

Json strip_elapsed(const std::string& text) {
    Json j = Json::parse(text);
    j.erase("elapsed_ms");
    return j;
}

DescentDatum trivial_ball() {
    DescentDatum d;
    d.n = 1;
    d.nerve = nerve_fixture("ball");
    d.q.assign(d.nerve.edges.size(), Symbol::one(1));
    d.p.assign(d.nerve.triangles.size(),
               HalfFormOperator(RationalFunction::constant(1, 1), Symbol::one(1)));
    return d;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("star emits the report envelope") {
    Symbol a = Symbol::x_var(1, 0);
    Symbol b = Symbol::u_tau(1, 0);
    std::string pa = write_json("a.json", to_json(a));
    std::string pb = write_json("b.json", to_json(b));

    RunResult r = run_tool("star " + pa + " " + pb);
    CHECK(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("verb") == "star");
    CHECK(rep.at("result") == to_json(star(a, b)));
    CHECK(rep.at("checks") == Json::array());
    CHECK(rep.at("elapsed_ms").is_number_integer());
}

TEST_CASE("--depth truncates the inputs") {
    Symbol a = Symbol::one(1) + Symbol::x_var(1, 0);
    Symbol b = Symbol::u_tau(1, 0) + Symbol::one(1);
    std::string pa = write_json("da.json", to_json(a));
    std::string pb = write_json("db.json", to_json(b));

    RunResult r = run_tool("star " + pa + " " + pb + " --depth 3");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("result") ==
          to_json(star(a.truncated_depth(3), b.truncated_depth(3))));

    RunResult bad = run_tool("star " + pa + " " + pb + " --depth 0");
    CHECK(bad.code == 2);
    CHECK(Json::parse(bad.out).at("result").at("error") == "ParseError");
}

TEST_CASE("reports are deterministic modulo elapsed_ms") {
    std::string pa = write_json("ra.json", to_json(Symbol::u_tau(2, 1)));
    std::string pb = write_json("rb.json", to_json(Symbol::x_var(2, 1)));
    RunResult r1 = run_tool("star " + pa + " " + pb);
    RunResult r2 = run_tool("star " + pa + " " + pb);
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(strip_elapsed(r1.out).dump() == strip_elapsed(r2.out).dump());

    RunResult h1a = run_tool("h1 g1:Z2 circle");
    RunResult h1b = run_tool("h1 g1:Z2 circle");
    CHECK(strip_elapsed(h1a.out).dump() == strip_elapsed(h1b.out).dump());
}

TEST_CASE("--out writes a byte-identical copy") {
    std::string pa = write_json("oa.json", to_json(Symbol::one(1)));
    std::string copy = (work_dir() / "report.json").string();
    RunResult r = run_tool("invert " + pa + " --out " + copy);
    CHECK(r.code == 0);
    CHECK(slurp(copy) == r.out);
}

TEST_CASE("adjoint dispatches on the input shape") {
    Symbol p = Symbol::u_tau(1, 0);
    std::string ps = write_json("adj_sym.json", to_json(p));
    RunResult rs = run_tool("adjoint " + ps);
    CHECK(rs.code == 0);
    CHECK(Json::parse(rs.out).at("result") == to_json(adjoint_dx(p)));

    Polynomial x = Polynomial::variable(1, 0);
    HalfFormOperator h(RationalFunction(Polynomial(1, 1) + x * x), p);
    std::string ph = write_json("adj_hf.json", to_json(h));
    RunResult rh = run_tool("adjoint " + ph);
    CHECK(rh.code == 0);
    CHECK(Json::parse(rh.out).at("result") == to_json(adjoint(h)));
    CHECK(Json::parse(rh.out).at("result").contains("g"));
}

TEST_CASE("invert maps domain errors to exit 1") {
    Symbol unit = (Symbol::one(1) + Symbol::term(CoefficientFunction::u_var(1, 0), -1))
                      .truncated_to(-3);
    std::string pu = write_json("inv_ok.json", to_json(unit));
    RunResult ok = run_tool("invert " + pu);
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("result") == to_json(invert(unit)));

    std::string pn = write_json("inv_bad.json", to_json(Symbol::u_tau(1, 0)));
    RunResult bad = run_tool("invert " + pn);
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out).at("result").at("error") == "NotInvertible");

    Symbol exact = Symbol::one(1) + Symbol::term(CoefficientFunction::u_var(1, 0), -1);
    std::string pe = write_json("inv_exact.json", to_json(exact));
    RunResult depth = run_tool("invert " + pe);
    CHECK(depth.code == 1);
    CHECK(Json::parse(depth.out).at("result").at("error") == "DepthRequired");
    RunResult fixed = run_tool("invert " + pe + " --depth 4");
    CHECK(fixed.code == 0);
    CHECK(Json::parse(fixed.out).at("result") == to_json(invert(exact.truncated_depth(4))));
}

TEST_CASE("symbol extracts a homogeneous part") {
    Symbol p = Symbol::u_tau(1, 0) + Symbol::one(1);
    std::string pp = write_json("sym.json", to_json(p));

    RunResult r = run_tool("symbol 1 " + pp);
    CHECK(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("result").at("order") == 1);
    CHECK(rep.at("result").at("coefficient") == to_json(p.symbol_of_order(1)));

    RunResult above = run_tool("symbol 5 " + pp);
    CHECK(above.code == 0);
    CHECK(Json::parse(above.out).at("result").at("coefficient") ==
          to_json(CoefficientFunction(1)));

    // negative orders go after the positional separator
    RunResult neg = run_tool("symbol -- -1 " + pp);
    CHECK(neg.code == 1);
    CHECK(Json::parse(neg.out).at("result").at("error") == "OrderTooHigh");

    std::string pt = write_json("sym_tr.json", to_json(p.truncated_to(0)));
    RunResult below = run_tool("symbol -- -1 " + pt);
    CHECK(below.code == 1);
    CHECK(Json::parse(below.out).at("result").at("error") == "BelowTruncation");
}

TEST_CASE("kstar and wstar report memberships as verdicts") {
    // truncation of exp(1/tau), which satisfies s(tau) s(-tau) = 1
    TauSeries member({{0, 1}, {-1, 1}, {-2, Rational(1, 2)}, {-3, Rational(1, 6)}}, -3);
    std::string ps = write_json("ks.json", to_json(member));
    RunResult triv = run_tool("kstar " + ps);
    CHECK(triv.code == 0);
    CHECK(Json::parse(triv.out).at("result").at("member") == true);

    std::string pb = write_json("ks_bad.json",
                                to_json(TauSeries::constant(1) + TauSeries::monomial(-1, 1)));
    RunResult bad = run_tool("kstar " + pb);
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out).at("result").at("member") == false);

    std::string ph = write_json(
        "ws.json", to_json(HalfFormOperator(RationalFunction::constant(1, 1), Symbol::one(1))));
    RunResult w = run_tool("wstar " + ph);
    CHECK(w.code == 0);
    CHECK(Json::parse(w.out).at("result").at("member") == true);

    std::string pw = write_json(
        "ws_bad.json",
        to_json(HalfFormOperator(RationalFunction::constant(1, 1), Symbol::one(1) * Rational(2))));
    RunResult wbad = run_tool("wstar " + pw);
    CHECK(wbad.code == 1);
    CHECK(Json::parse(wbad.out).at("result").at("member") == false);
}

TEST_CASE("cm-validate distinguishes invalid data from malformed input") {
    CHECK(run_tool("cm-validate central:Q8").code == 0);
    CHECK(run_tool("cm-validate g0:S3").code == 0);

    RunResult nab = run_tool("cm-validate g1:S3");
    CHECK(nab.code == 1);
    CHECK(Json::parse(nab.out).at("result").at("error") == "NotAbelian");

    Json tampered = to_json(cm_fixture("central:Q8"));
    tampered["act"][1][2] = 0;
    RunResult bad = run_tool("cm-validate " + write_json("cm_bad.json", tampered));
    CHECK(bad.code == 1);
    Json rep = Json::parse(bad.out);
    CHECK(rep.at("result").at("valid") == false);
    CHECK(rep.at("result").at("violations").size() == 1);

    RunResult unknown = run_tool("cm-validate weird:Z4");
    CHECK(unknown.code == 2);
    CHECK(Json::parse(unknown.out).at("result").at("error") == "ParseError");
}

TEST_CASE("check0 and check1 verify cocycles from files") {
    Nerve interval = nerve_fixture("interval");
    ZeroCochain good{{0, 0}, {0}};
    std::string pg = write_json("c0_good.json", to_json(good, interval));
    RunResult ok = run_tool("check0 central:Q8 interval " + pg);
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("result").at("ok") == true);

    ZeroCochain broken{{1, 0}, {0}};
    std::string pbad = write_json("c0_bad.json", to_json(broken, interval));
    RunResult bad = run_tool("check0 central:Q8 interval " + pbad);
    CHECK(bad.code == 1);
    Json rep = Json::parse(bad.out);
    CHECK(rep.at("result").at("ok") == false);
    CHECK(rep.at("result").at("violations").size() == 1);

    std::string pmiss = write_json("c0_miss.json", Json{{"g", {{"0", 0}}}, {"h", {{"0,1", 0}}}});
    RunResult miss = run_tool("check0 central:Q8 interval " + pmiss);
    CHECK(miss.code == 2);
    CHECK(Json::parse(miss.out).at("result").at("error") == "MissingAssignment");

    Nerve circle = nerve_fixture("circle");
    OneCochain loop{{0, 0, 0}, {}};
    std::string p1 = write_json("c1_good.json", to_json(loop, circle));
    CHECK(run_tool("check1 central:Q8 circle " + p1).code == 0);
}

TEST_CASE("h0 and h1 classify fixture data") {
    RunResult r = run_tool("h1 g1:Z2 sphere");
    CHECK(r.code == 0);
    Json res = Json::parse(r.out).at("result");
    CHECK(res.at("cocycles") == 16);
    CHECK(res.at("classes") == 2);
    CHECK(res.at("complete") == true);
    CHECK(res.at("has_group") == true);
    CHECK(res.at("invariant_factors") == Json::array({2}));
    CHECK(res.at("reps").size() == 2);

    RunResult h0r = run_tool("h0 g0:Z2 point");
    CHECK(h0r.code == 0);
    CHECK(Json::parse(h0r.out).at("result").at("classes") == 2);

    RunResult cut = run_tool("h1 central:Q8 sphere --budget 100");
    CHECK(cut.code == 1);
    Json partial = Json::parse(cut.out).at("result");
    CHECK(partial.at("complete") == false);
    CHECK(partial.at("cocycles").get<long long>() < 65536);

    RunResult unknown = run_tool("h0 bogus circle");
    CHECK(unknown.code == 2);
}

TEST_CASE("cech computes classical cohomology") {
    RunResult r = run_tool("cech 2 Z3 sphere");
    CHECK(r.code == 0);
    Json res = Json::parse(r.out).at("result");
    CHECK(res.at("classes") == 3);
    CHECK(res.at("invariant_factors") == Json::array({3}));

    RunResult nab = run_tool("cech 1 S3 circle");
    CHECK(nab.code == 1);
    CHECK(Json::parse(nab.out).at("result").at("error") == "NotAbelian");

    RunResult deg = run_tool("cech 3 Z2 circle");
    CHECK(deg.code == 2);
    CHECK(Json::parse(deg.out).at("result").at("error") == "ParseError");
}

TEST_CASE("compare-hyper lists one check per correspondence") {
    RunResult r = run_tool("compare-hyper Z2 circle");
    CHECK(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("result").at("ok") == true);
    REQUIRE(rep.at("checks").size() == 4);
    for (const auto& c : rep.at("checks")) CHECK(c.at("ok") == true);

    RunResult cut = run_tool("compare-hyper Z2 sphere --budget 10");
    CHECK(cut.code == 1);
    CHECK(Json::parse(cut.out).at("result").at("error") == "MismatchDetected");
}

TEST_CASE("descent-validate and extract-class work end to end") {
    DescentDatum d = trivial_ball();
    std::string pd = write_json("descent.json", to_json(d));
    RunResult ok = run_tool("descent-validate " + pd);
    CHECK(ok.code == 0);
    Json rep = Json::parse(ok.out);
    CHECK(rep.at("result").at("ok") == true);
    CHECK(rep.at("checks").size() == 15);

    RunResult cls = run_tool("extract-class " + pd);
    CHECK(cls.code == 0);
    Json by_tri = Json::parse(cls.out).at("result").at("class");
    REQUIRE(by_tri.size() == 4);
    CHECK(by_tri.at("0,1,2") == to_json(TauSeries::constant(1)));

    DescentDatum bad = trivial_ball();
    bad.p[0] = HalfFormOperator(RationalFunction::constant(1, 1),
                                Symbol::one(1) * Rational(2));
    std::string pbad = write_json("descent_bad.json", to_json(bad));
    RunResult invalid = run_tool("descent-validate " + pbad);
    CHECK(invalid.code == 1);
    CHECK(Json::parse(invalid.out).at("result").at("ok") == false);

    DescentDatum off = trivial_ball();
    off.q[0] = Symbol::scalar(1, TauSeries::monomial(2, 3));
    std::string poff = write_json("descent_off.json", to_json(off));
    RunResult defect = run_tool("extract-class " + poff);
    CHECK(defect.code == 1);
    CHECK(Json::parse(defect.out).at("result").at("error") == "NonCentralDefect");
}

TEST_CASE("bridge verifies, maps forward and maps backward") {
    RunResult v = run_tool("bridge --group Z4 --nerve sphere");
    CHECK(v.code == 0);
    Json res = Json::parse(v.out).at("result");
    CHECK(res.at("classes_cm") == 4);
    CHECK(res.at("classes_classical") == 4);
    CHECK(res.at("forward_ok") == true);
    CHECK(res.at("backward_ok") == true);

    RunResult cut = run_tool("bridge --group Q8 --nerve circle --budget 10");
    CHECK(cut.code == 1);
    CHECK(Json::parse(cut.out).at("result").at("error") == "BudgetExceeded");

    // backward then forward is the identity on classical cocycles
    std::string pz = write_json("z.json", Json{{"z", {{"0,1,2", 1}}}});
    RunResult back = run_tool("bridge --group Q8 --nerve disk --backward " + pz);
    CHECK(back.code == 0);
    Json cochain = Json::parse(back.out).at("result");
    CHECK(cochain.at("h").at("0,1,2") == 1);
    std::string pc = write_json("c.json", cochain);
    RunResult fwd = run_tool("bridge --group Q8 --nerve disk --forward " + pc);
    CHECK(fwd.code == 0);
    CHECK(Json::parse(fwd.out).at("result").at("z").at("0,1,2") == 1);

    // element 2 of Q8 is i, which is not central
    RunResult lift = run_tool("bridge --group Q8 --nerve disk --backward " +
                              write_json("z_bad.json", Json{{"z", {{"0,1,2", 2}}}}));
    CHECK(lift.code == 1);
    CHECK(Json::parse(lift.out).at("result").at("error") == "LiftFailure");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_tool("frobnicate x").code == 2);
    CHECK(run_tool("star only_one.json").code == 2);
    CHECK(run_tool("star missing_a.json missing_b.json").code == 2);
    CHECK(run_tool("").code == 2);
}

} // TEST_SUITE
