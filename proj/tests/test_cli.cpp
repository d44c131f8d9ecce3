#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hpq/io.hpp"
#include "hpq/l1.hpp"
#include "hpq/quantize.hpp"

namespace fs = std::filesystem;
using namespace hpq;

namespace {

const fs::path kWork = fs::temp_directory_path() / "hpq_cli_tests";

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HPQ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct WorkDir {
    WorkDir() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
    }
};
const WorkDir kSetup;

const char* kSmallGrid =
    R"("grid": {"u_min":-6,"u_max":6,"n_u":64,"a_min":-16,"a_max":16,"n_a":128},
       "rho_grid": {"u_min":-9,"u_max":6})";

} // namespace

TEST_CASE("grid function CSV round trip") {
    PhaseGrid g;
    g.n_u = 16;
    g.du = 12.0 / 16.0;
    g.u_min = -6.0;
    g.n_a = 8;
    g.da = 4.0;
    g.a_min = -16.0;
    GridFunction f = GridFunction::gaussian(g, 0.1, -0.3, 1.0, 2.0);
    f.at(3, 4) = cplx(1.2345678901234567e-7, -3.14);
    const std::string path = (kWork / "f.csv").string();
    io::write_grid_function_csv(path, f, "deadbeef");
    const GridFunction back = io::read_grid_function_csv(path);
    REQUIRE(back.grid == f.grid);
    for (std::size_t i = 0; i < f.v.size(); ++i) CHECK(back.v[i] == f.v[i]);
}

TEST_CASE("kernel CSV round trip keeps doubles bit-exact") {
    RhoGrid rg;
    rg.u_min = -3.0;
    rg.n = 16;
    rg.du = 0.375;
    HalfLineOperator op{rg, -1, 0.5, Eigen::MatrixXcd::Random(16, 16)};
    const std::string path = (kWork / "k.csv").string();
    io::write_kernel_csv(path, op, "cafe");
    const HalfLineOperator back = io::read_kernel_csv(path);
    CHECK(back.sign == -1);
    CHECK(back.hbar == 0.5);
    CHECK((back.kernel - op.kernel).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quantize then dequantize through files matches in-memory") {
    const fs::path dir = kWork / "roundtrip";
    fs::create_directories(dir);
    write_file(dir / "q.json", std::string(R"({"hbar":1.0,"sign":"+",)") + kSmallGrid +
                                   R"(,"function":{"preset":"gaussian","u0":0.2,"a0":0.3,"sigma1":1.0,"sigma2":1.0}})");
    REQUIRE(run_cli("quantize --config " + (dir / "q.json").string() + " --out " +
                    dir.string() + " --quiet") == 0);

    // in-memory reference
    PhaseGrid pg;
    pg.n_u = 64;
    pg.du = 12.0 / 64.0;
    pg.u_min = -6.0;
    pg.n_a = 128;
    pg.da = 32.0 / 128.0;
    pg.a_min = -16.0;
    RhoGrid rg;
    rg.du = pg.du;
    rg.u_min = -9.0;
    rg.n = 80;
    const GridFunction f = GridFunction::gaussian(pg, 0.2, 0.3, 1.0, 1.0);
    const HalfLineOperator mem = quantize(f, +1, 1.0, rg);

    const HalfLineOperator file_op =
        io::read_kernel_csv((dir / "kernel.csv").string());
    REQUIRE(file_op.grid.n == mem.grid.n);
    CHECK((file_op.kernel - mem.kernel).cwiseAbs().maxCoeff() < 1e-15);

    // dequantize through the file and in memory
    write_file(dir / "d.json",
               R"({"kernel_plus":")" + (dir / "kernel.csv").string() +
                   R"(","probes":{"k_min":-2,"k_max":2,"a_values":[0.0,0.7]}})");
    REQUIRE(run_cli("dequantize --config " + (dir / "d.json").string() + " --out " +
                    dir.string() + " --quiet") == 0);
    std::ifstream in(dir / "dequantized.csv");
    std::string line;
    std::getline(in, line); // header
    double max_err = 0.0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        double vals[4];
        for (double& v : vals) {
            std::getline(ss, cell, ',');
            v = std::stod(cell);
        }
        const cplx mine = dequantize(mem, AffineElement{vals[0], vals[1]});
        max_err = std::max(max_err, std::abs(mine - cplx(vals[2], vals[3])));
    }
    CHECK(max_err < 1e-12);
}

TEST_CASE("determinism: identical config and seed give identical bytes") {
    const fs::path dir = kWork / "det";
    fs::create_directories(dir);
    write_file(dir / "p.json",
               std::string(R"({"hbar":1.0,)") + kSmallGrid +
                   R"(,"function":{"preset":"gaussian"}})");
    for (const char* sub : {"a", "b"}) {
        REQUIRE(run_cli("plancherel --config " + (dir / "p.json").string() +
                        " --seed 42 --out " + (dir / sub).string() + " --quiet") == 0);
    }
    CHECK(slurp(dir / "a" / "plancherel.json") == slurp(dir / "b" / "plancherel.json"));
    CHECK(slurp(dir / "a" / "plancherel.json.meta.json") ==
          slurp(dir / "b" / "plancherel.json.meta.json"));
}

TEST_CASE("strict configs and exit codes") {
    const fs::path dir = kWork / "errors";
    fs::create_directories(dir);

    // unknown key -> exit 1
    write_file(dir / "bad.json", R"({"hbar":1.0,"functionn":{"preset":"gaussian"}})");
    CHECK(run_cli("plancherel --config " + (dir / "bad.json").string() + " --out " +
                  dir.string()) == 1);

    // malformed JSON -> exit 1 (diagnostic carries a line number)
    write_file(dir / "parse.json", "{\n  \"hbar\": 1.0,\n  oops\n}\n");
    CHECK(run_cli("plancherel --config " + (dir / "parse.json").string() + " --out " +
                  dir.string()) == 1);
    try {
        io::load_json_file((dir / "parse.json").string());
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }

    // missing config -> exit 1
    CHECK(run_cli("plancherel --out " + dir.string()) == 1);

    // residual above tolerance -> exit 2
    write_file(dir / "tight.json",
               std::string(R"({"hbar":1.0,)") + kSmallGrid +
                   R"(,"function":{"preset":"gaussian"}})");
    CHECK(run_cli("plancherel --config " + (dir / "tight.json").string() +
                  " --tolerance 1e-15 --out " + dir.string()) == 2);
}

TEST_CASE("orbits subcommand on empty and nonempty input") {
    const fs::path dir = kWork / "orbits";
    fs::create_directories(dir);
    write_file(dir / "empty.csv", "eta_A,eta_L\n");
    write_file(dir / "o.json", R"({"input":")" + (dir / "empty.csv").string() + R"("})");
    REQUIRE(run_cli("orbits --config " + (dir / "o.json").string() + " --out " +
                    dir.string() + " --quiet") == 0);
    CHECK(slurp(dir / "orbits.csv") == "eta_A,eta_L,class,kirillov_coeff\n");

    write_file(dir / "pts.csv", "eta_A,eta_L\n2.5,-1.0\n0.0,3.0\n");
    write_file(dir / "o2.json", R"({"input":")" + (dir / "pts.csv").string() + R"("})");
    REQUIRE(run_cli("orbits --config " + (dir / "o2.json").string() + " --out " +
                    dir.string() + " --quiet") == 0);
    const std::string text = slurp(dir / "orbits.csv");
    CHECK(text.find("plus_halfplane") != std::string::npos);
    CHECK(text.find("point") != std::string::npos);
}

TEST_CASE("group loading from action tables") {
    io::json j = {{"order_S", 2},
                  {"order_N", 3},
                  {"product_S", {{0, 1}, {1, 0}}},
                  {"product_N", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}},
                  {"action", {{0, 1, 2}, {0, 2, 1}}}};
    const SemidirectProduct g = io::semidirect_from_json(j);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.as_group().is_abelian());

    // invalid action (not an automorphism action) is rejected
    j["action"] = {{0, 1, 2}, {1, 0, 2}};
    CHECK_THROWS_AS((void)io::semidirect_from_json(j), InputError);

    CHECK(io::catalog_group("Z4").order() == 4);
    CHECK(io::catalog_group("Z4xZ2").order() == 8);
    CHECK_THROWS_AS((void)io::catalog_group("Q8"), InputError);
}

TEST_CASE("config hash is stable and seed-sensitive") {
    const io::json cfg = {{"hbar", 1.0}};
    const std::string h1 = io::config_hash_hex(cfg, 1);
    const std::string h2 = io::config_hash_hex(cfg, 1);
    const std::string h3 = io::config_hash_hex(cfg, 2);
    CHECK(h1 == h2);
    CHECK(h1 != h3);
    CHECK(h1.size() == 16);
}

TEST_CASE("plancherel and wigner consume kernel CSVs") {
    const fs::path dir = kWork / "kernelio";
    fs::create_directories(dir);
    const std::string grid =
        R"("grid":{"u_min":-6,"u_max":6,"n_u":64,"a_min":-16,"a_max":16,"n_a":128},
           "rho_grid":{"u_min":-12,"u_max":6})";
    for (const char* sign : {"+", "-"}) {
        write_file(dir / "q.json", std::string(R"({"hbar":1,"sign":")") + sign +
                                       "\"," + grid +
                                       R"(,"function":{"preset":"gaussian"}})");
        const std::string tag = (sign[0] == '+') ? "kp" : "km";
        REQUIRE(run_cli("quantize --config " + (dir / "q.json").string() + " --out " +
                        (dir / tag).string() + " --quiet") == 0);
    }
    write_file(dir / "p.json",
               std::string(R"({"hbar":1,)") + grid +
                   R"(,"function":{"preset":"gaussian"},"kernel_plus":")" +
                   (dir / "kp" / "kernel.csv").string() + R"(","kernel_minus":")" +
                   (dir / "km" / "kernel.csv").string() + R"("})");
    CHECK(run_cli("plancherel --config " + (dir / "p.json").string() + " --out " +
                  dir.string() + " --quiet") == 0);

    // wigner with a mismatched kernel grid reports an input error
    write_file(dir / "w.json",
               R"({"hbar":1,"state":{"preset":"gaussian"},"sweep":{"k_min":0,"k_max":0,"a_min":0,"a_max":1,"n_a":2},"kernel":")" +
                   (dir / "kp" / "kernel.csv").string() + R"("})");
    CHECK(run_cli("wigner --config " + (dir / "w.json").string() + " --out " +
                  dir.string() + " --quiet") == 1);
}

TEST_CASE("kac-verify on Z2 reports zero residuals and exits 0") {
    const fs::path dir = kWork / "z2";
    fs::create_directories(dir);
    write_file(dir / "g.json", R"({"group":"Z2"})");
    CHECK(run_cli("kac-verify --config " + (dir / "g.json").string() + " --out " +
                  dir.string() + " --quiet") == 0);
    const io::json rep = io::load_json_file((dir / "kac_report.json").string());
    CHECK(rep.at("max_residual").get<double>() <= 1e-12);
    CHECK(rep.at("pontryagin_max_residual").get<double>() <= 1e-12);
}
