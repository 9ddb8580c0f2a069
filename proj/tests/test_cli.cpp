#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "floquet/cli_app.hpp"

namespace fs = std::filesystem;
using floquet::cli::run;

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> footers;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("no column " + name);
    }
    std::vector<double> column(const std::string& name) const {
        std::vector<double> v;
        const std::size_t j = col(name);
        for (const auto& r : rows) v.push_back(r[j]);
        return v;
    }
    // value of "key=..." inside any footer line
    double footer_value(const std::string& key) const {
        for (const auto& f : footers) {
            const auto pos = f.find(key + "=");
            if (pos == std::string::npos) continue;
            return std::stod(f.substr(pos + key.size() + 1));
        }
        throw std::runtime_error("no footer key " + key);
    }
};

Csv read_csv(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    Csv out;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            out.footers.push_back(line);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            out.header = cells;
            first = false;
        } else {
            std::vector<double> r;
            for (const auto& c : cells) r.push_back(std::stod(c));
            out.rows.push_back(r);
        }
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("floquet_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int sign_changes(const std::vector<double>& v) {
    int n = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] * v[i] < 0.0) ++n;
    return n;
}

}  // namespace

TEST_CASE("masses command reproduces the tabulated roots") {
    TempDir tmp;
    const std::string out = tmp.file("m.csv");
    REQUIRE(run({"masses", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    REQUIRE(t.rows.size() == 8);
    const std::vector<double> masses{4.5659,  7.7681,  10.9346, 14.0898,
                                     17.2401, 20.3876, 23.5336, 26.6785};
    const std::vector<double> d5{14.1881, -14.7151, 14.8556, -14.9129,
                                 14.9418, -14.9583, 14.9687, -14.9757};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(t.rows[i][t.col("m_k")] - masses[i]) < 5e-4);
        CHECK(std::abs(t.rows[i][t.col("scaled_d5")] - d5[i]) < 5e-4);
        CHECK(t.rows[i][t.col("residual")] <= 1e-9);
    }
}

TEST_CASE("masses command with a wide search window") {
    TempDir tmp;
    const std::string out = tmp.file("m70.csv");
    REQUIRE(run({"masses", "--m-max", "70", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    CHECK(t.rows.size() >= 20);
    for (const auto& r : t.rows) {
        CHECK(std::abs(r[t.col("scaled_d5")]) > 14.0);
        CHECK(std::abs(r[t.col("scaled_d5")]) < 15.1);
    }
}

TEST_CASE("deterministic output byte-for-byte") {
    TempDir tmp;
    const std::string a = tmp.file("a.csv"), b = tmp.file("b.csv");
    REQUIRE(run({"masses", "--no-timestamp", "--out", a}) == 0);
    REQUIRE(run({"masses", "--no-timestamp", "--out", b}) == 0);
    std::string sa = slurp(a), sb = slurp(b);
    // only the output path differs between the two provenance footers
    const auto strip = [](std::string s, const std::string& needle) {
        for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle))
            s.erase(pos, needle.size());
        return s;
    };
    CHECK(strip(sa, a) == strip(sb, b));
}

TEST_CASE("dispersion mass scan brackets the eight roots") {
    TempDir tmp;
    const std::string out = tmp.file("disp.csv");
    REQUIRE(run({"dispersion", "--scan", "mass", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    CHECK(sign_changes(t.column("theta3_at_0")) == 8);

    CHECK(run({"dispersion", "--scan", "mass", "--m-min", "5", "--m-max", "4", "--out",
               tmp.file("none.csv")}) == 2);
    CHECK_FALSE(fs::exists(tmp.file("none.csv")));
}

TEST_CASE("dispersion xi scan shows the inflection chain") {
    TempDir tmp;
    const std::string out = tmp.file("dx.csv");
    REQUIRE(run({"dispersion", "--scan", "xi", "--m", "1", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    CHECK(sign_changes(t.column("theta2")) >= 10);
}

TEST_CASE("evolve at n = 0 returns the packet's inverse transform") {
    TempDir tmp;
    const std::string out = tmp.file("e0.csv");
    REQUIRE(run({"evolve", "--model", "switching", "--m", "1", "--delta", "0.5", "--periods",
                 "0", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    const floquet::Wavepacket packet{floquet::Envelope::Bump, 0.5, 0.0,
                                     floquet::Vec2c{floquet::complexd{1.0, 0.0}, {}}};
    const auto grid = floquet::auto_grid(packet, 0.0);
    const auto phys = floquet::to_physical(floquet::make_wavepacket(packet, grid));
    REQUIRE(t.rows.size() == phys.values.size());
    for (std::size_t k = 0; k < phys.values.size(); k += 7) {
        CHECK(std::abs(t.rows[k][1] - phys.values[k].a.real()) < 1e-12);
        CHECK(std::abs(t.rows[k][2] - phys.values[k].a.imag()) < 1e-12);
    }
}

TEST_CASE("evolve conserves the reported L2 norm across periods") {
    TempDir tmp;
    double norms[3];
    int i = 0;
    for (const char* n : {"0", "100", "1000"}) {
        const std::string out = tmp.file(std::string("en") + n + ".csv");
        REQUIRE(run({"evolve", "--model", "switching", "--m", "1", "--delta", "0.5",
                     "--periods", n, "--no-timestamp", "--out", out}) == 0);
        norms[i++] = read_csv(out).footer_value("l2_norm");
    }
    CHECK(std::abs(norms[1] - norms[0]) < 1e-10 * norms[0]);
    CHECK(std::abs(norms[2] - norms[0]) < 1e-10 * norms[0]);
}

TEST_CASE("evolve matches the oracle-generated rotating golden snapshot") {
    TempDir tmp;
    const std::string out = tmp.file("rot.csv");
    REQUIRE(run({"evolve", "--model", "rotating", "--m", "1", "--drive", "1", "--time", "10",
                 "--delta", "2", "--xi-extent", "4", "--grid-n", "512", "--no-timestamp",
                 "--out", out}) == 0);
    const Csv got = read_csv(out);
    const Csv golden = read_csv(fs::path(FLOQUET_TEST_DATA_DIR) / "golden_rotating_t10.csv");
    REQUIRE(got.rows.size() == golden.rows.size());
    for (std::size_t k = 0; k < got.rows.size(); ++k)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(got.rows[k][j] - golden.rows[k][j]) < 1e-6);
}

TEST_CASE("evolve spectral snapshot") {
    TempDir tmp;
    const std::string out = tmp.file("spec.csv");
    REQUIRE(run({"evolve", "--model", "switching", "--m", "1", "--delta", "0.5", "--periods",
                 "3", "--space", "spectral", "--no-timestamp", "--out", out}) == 0);
    const Csv t = read_csv(out);
    CHECK(t.header[0] == "xi");
    // per-mode unitarity: |evolved| equals the envelope pointwise
    const floquet::Wavepacket packet{floquet::Envelope::Bump, 0.5, 0.0,
                                     floquet::Vec2c{floquet::complexd{1.0, 0.0}, {}}};
    for (std::size_t k = 0; k < t.rows.size(); k += 13) {
        const auto& r = t.rows[k];
        const double mag =
            std::sqrt(r[1] * r[1] + r[2] * r[2] + r[3] * r[3] + r[4] * r[4]);
        CHECK(std::abs(mag - packet.fourier(r[0]).norm()) < 1e-12);
    }
}

TEST_CASE("evolve grid checks") {
    TempDir tmp;
    // undersized physical period: the peak wraps, the doubling check trips
    CHECK(run({"evolve", "--model", "switching", "--m", "1", "--delta", "0.5", "--periods",
               "64", "--xi-extent", "1", "--grid-n", "64", "--out", tmp.file("wrap.csv")}) == 3);
    // model/extent mismatches
    CHECK(run({"evolve", "--model", "switching", "--m", "1", "--time", "4", "--out",
               tmp.file("x.csv")}) == 2);
    CHECK(run({"evolve", "--model", "rotating", "--m", "1", "--periods", "4", "--out",
               tmp.file("y.csv")}) == 2);
}

TEST_CASE("decay-fit footers carry the three reference exponents") {
    TempDir tmp;
    const std::string a = tmp.file("sw.csv");
    REQUIRE(run({"decay-fit", "--model", "switching", "--m", "1", "--no-timestamp", "--out",
                 a}) == 0);
    const double e1 = read_csv(a).footer_value("exponent");
    CHECK(e1 > -0.363);
    CHECK(e1 < -0.303);

    const std::string b = tmp.file("exc.csv");
    REQUIRE(run({"decay-fit", "--model", "switching", "--m", "4.5659", "--no-timestamp",
                 "--out", b}) == 0);
    const double e2 = read_csv(b).footer_value("exponent");
    CHECK(e2 > -0.23);
    CHECK(e2 < -0.17);

    const std::string c = tmp.file("rot.csv");
    REQUIRE(run({"decay-fit", "--model", "rotating", "--m", "1", "--drive", "1",
                 "--no-timestamp", "--out", c}) == 0);
    const double e3 = read_csv(c).footer_value("exponent");
    CHECK(e3 > -0.55);
    CHECK(e3 < -0.45);
}

TEST_CASE("airy-check convergence columns") {
    TempDir tmp;
    const std::string a = tmp.file("a3.csv");
    REQUIRE(run({"airy-check", "--order", "3", "--no-timestamp", "--out", a}) == 0);
    const Csv t3 = read_csv(a);
    const auto rel3 = t3.column("rel_error");
    for (std::size_t i = 1; i < rel3.size(); ++i) CHECK(rel3[i] < rel3[i - 1]);
    CHECK(rel3.back() <= 0.02);

    const std::string b = tmp.file("a5.csv");
    REQUIRE(run({"airy-check", "--order", "5", "--no-timestamp", "--out", b}) == 0);
    const Csv t5 = read_csv(b);
    CHECK(t5.column("rel_error").back() <= 0.05);

    // exact dyadic scaling of the asymptotic column
    const std::string c = tmp.file("pairs.csv");
    REQUIRE(run({"airy-check", "--order", "3", "--omega-list", "1000,2000", "--no-timestamp",
                 "--out", c}) == 0);
    const auto asym = read_csv(c).column("asymptotic_abs");
    CHECK(asym[1] / asym[0] == doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-12));

    const std::string d = tmp.file("pairs5.csv");
    REQUIRE(run({"airy-check", "--order", "5", "--omega-list", "1000,2000", "--no-timestamp",
                 "--out", d}) == 0);
    const auto asym5 = read_csv(d).column("asymptotic_abs");
    CHECK(asym5[1] / asym5[0] == doctest::Approx(std::pow(2.0, -1.0 / 5.0)).epsilon(1e-12));

    CHECK(run({"airy-check", "--omega-list", "1e30", "--out", tmp.file("q.csv")}) == 4);
}

TEST_CASE("inflections command emits the decay slope") {
    TempDir tmp;
    const std::string out = tmp.file("infl.csv");
    REQUIRE(run({"inflections", "--m", "1", "--xi-max", "200", "--no-timestamp", "--out",
                 out}) == 0);
    const Csv t = read_csv(out);
    CHECK(t.rows.size() >= 60);
    const double slope = t.footer_value("slope");
    CHECK(slope > -2.1);
    CHECK(slope < -1.9);
    for (const auto& r : t.rows) CHECK(r[t.col("theta2_residual")] <= 1e-8);
}

TEST_CASE("config file: plain keys, overrides, unknown keys") {
    TempDir tmp;
    const std::string cfg = tmp.file("run.cfg");
    {
        std::ofstream os(cfg);
        os << "m-max = 40\nno-timestamp = true\n";
    }
    const std::string a = tmp.file("cfg_a.csv");
    REQUIRE(run({"masses", "--config", cfg, "--out", a}) == 0);
    CHECK(read_csv(a).rows.size() == 12);  // roots up to m = 40

    // command-line flag wins over the config value
    const std::string b = tmp.file("cfg_b.csv");
    REQUIRE(run({"masses", "--config", cfg, "--m-max", "27", "--out", b}) == 0);
    CHECK(read_csv(b).rows.size() == 8);

    const std::string bad = tmp.file("bad.cfg");
    {
        std::ofstream os(bad);
        os << "m-max = 40\nbogus-key = 3\n";
    }
    CHECK(run({"masses", "--config", bad, "--out", tmp.file("cfg_c.csv")}) == 2);
}

TEST_CASE("svg companion output") {
    TempDir tmp;
    const std::string out = tmp.file("plot.csv");
    REQUIRE(run({"masses", "--format", "csv+svg", "--no-timestamp", "--out", out}) == 0);
    const std::string svg = slurp(tmp.file("plot.svg"));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("unknown flags and missing subcommands fail with code 2") {
    CHECK(run({"masses", "--definitely-not-a-flag", "1"}) == 2);
    CHECK(run({"no-such-command"}) == 2);
    TempDir tmp;
    CHECK(run({"dispersion", "--scan", "mass", "--samples", "1", "--out",
               tmp.file("s1.csv")}) == 2);
    CHECK(run({"decay-fit", "--model", "switching", "--n-list", "128,256,512", "--out",
               tmp.file("short.csv")}) == 2);
}

TEST_CASE("gaussian envelope and custom sweep through the CLI") {
    TempDir tmp;
    const std::string out = tmp.file("g.csv");
    REQUIRE(run({"decay-fit", "--model", "switching", "--m", "1", "--envelope", "gauss",
                 "--delta", "1.5", "--n-list", "64,128,256,512,1024,2048,4096,8192",
                 "--no-timestamp", "--out", out}) == 0);
    const double e = read_csv(out).footer_value("exponent");
    CHECK(e > -0.40);
    CHECK(e < -0.27);

    const std::string snap = tmp.file("gsnap.csv");
    REQUIRE(run({"evolve", "--model", "constant", "--m", "2", "--envelope", "gauss",
                 "--delta", "1", "--time", "5", "--no-timestamp", "--out", snap}) == 0);
    CHECK(read_csv(snap).footer_value("l2_norm") > 0.0);
}
