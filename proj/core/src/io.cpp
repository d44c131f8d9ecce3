#include "hpq/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hpq/version.hpp"

namespace hpq::io {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw InputError(path + ":" + std::to_string(line) + ": " + e.what());
    }
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed,
                         const std::string& context) {
    if (!j.is_object()) throw InputError(context + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw InputError(context + ": unknown key '" + it.key() + "'");
    }
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash_hex(const json& config, long seed) {
    const std::string canon = config.dump() + "#seed=" + std::to_string(seed);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon)));
    return buf;
}

void write_sidecar(const std::string& path, const std::string& config_hash,
                   const json& extra) {
    json meta = extra;
    meta["config_hash"] = config_hash;
    meta["tool_version"] = kVersion;
    std::ofstream out(path + ".meta.json", std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path + ".meta.json");
    out << meta.dump(2) << "\n";
}

void write_grid_function_csv(const std::string& path, const GridFunction& f,
                             const std::string& config_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << "u,a,re,im\n";
    for (int j = 0; j < f.grid.n_u; ++j)
        for (int m = 0; m < f.grid.n_a; ++m) {
            const cplx z = f.at(j, m);
            out << format_number(f.grid.u(j)) << ',' << format_number(f.grid.a(m))
                << ',' << format_number(z.real()) << ',' << format_number(z.imag())
                << '\n';
        }
    json grid{{"u_min", f.grid.u_min},   {"u_max", f.grid.u_max()},
              {"n_u", f.grid.n_u},       {"a_min", f.grid.a_min},
              {"a_max", f.grid.a_max()}, {"n_a", f.grid.n_a}};
    write_sidecar(path, config_hash, json{{"grid", grid}});
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& path,
                                               const std::string& header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InputError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw InputError(path + ":1: expected header '" + header + "'");
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InputError(path + ":" + std::to_string(lineno) +
                                 ": bad number '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

GridFunction read_grid_function_csv(const std::string& path) {
    const json meta = load_json_file(path + ".meta.json");
    if (!meta.contains("grid")) throw InputError(path + ".meta.json: missing grid");
    const json& g = meta["grid"];
    PhaseGrid grid;
    grid.u_min = g.at("u_min").get<double>();
    grid.n_u = g.at("n_u").get<int>();
    grid.du = (g.at("u_max").get<double>() - grid.u_min) / grid.n_u;
    grid.a_min = g.at("a_min").get<double>();
    grid.n_a = g.at("n_a").get<int>();
    grid.da = (g.at("a_max").get<double>() - grid.a_min) / grid.n_a;
    GridFunction f(grid);
    const auto rows = read_csv_rows(path, "u,a,re,im");
    if (rows.size() != f.grid.size())
        throw InputError(path + ": row count does not match the grid");
    std::size_t idx = 0;
    for (const auto& row : rows) {
        if (row.size() != 4) throw InputError(path + ": expected 4 columns");
        f.v[idx++] = cplx(row[2], row[3]);
    }
    return f;
}

void write_kernel_csv(const std::string& path, const HalfLineOperator& op,
                      const std::string& config_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << "i,j,re,im\n";
    for (int i = 0; i < op.grid.n; ++i)
        for (int j = 0; j < op.grid.n; ++j) {
            const cplx z = op.kernel(i, j);
            out << i << ',' << j << ',' << format_number(z.real()) << ','
                << format_number(z.imag()) << '\n';
        }
    json grid{{"u_min", op.grid.u_min},
              {"u_max", op.grid.u_max()},
              {"n", op.grid.n},
              {"sign", op.sign},
              {"hbar", op.hbar}};
    write_sidecar(path, config_hash, json{{"rho_grid", grid}});
}

HalfLineOperator read_kernel_csv(const std::string& path) {
    const json meta = load_json_file(path + ".meta.json");
    if (!meta.contains("rho_grid"))
        throw InputError(path + ".meta.json: missing rho_grid");
    const json& g = meta["rho_grid"];
    RhoGrid grid;
    grid.u_min = g.at("u_min").get<double>();
    grid.n = g.at("n").get<int>();
    grid.du = (g.at("u_max").get<double>() - grid.u_min) / grid.n;
    HalfLineOperator op{grid, g.at("sign").get<int>(), g.at("hbar").get<double>(),
                        Eigen::MatrixXcd::Zero(grid.n, grid.n)};
    const auto rows = read_csv_rows(path, "i,j,re,im");
    if (rows.size() != static_cast<std::size_t>(grid.n) * grid.n)
        throw InputError(path + ": row count does not match the grid");
    for (const auto& row : rows) {
        if (row.size() != 4) throw InputError(path + ": expected 4 columns");
        const int i = static_cast<int>(row[0]);
        const int j = static_cast<int>(row[1]);
        if (i < 0 || i >= grid.n || j < 0 || j >= grid.n)
            throw InputError(path + ": kernel index out of range");
        op.kernel(i, j) = cplx(row[2], row[3]);
    }
    return op;
}

SemidirectProduct semidirect_from_json(const json& j) {
    reject_unknown_keys(j, {"order_S", "order_N", "product_S", "product_N", "action"},
                        "group");
    const int ns = j.at("order_S").get<int>();
    const int nn = j.at("order_N").get<int>();
    auto table = [&](const char* key, int n) {
        std::vector<std::vector<int>> t;
        const json& tj = j.at(key);
        if (!tj.is_array() || static_cast<int>(tj.size()) != n)
            throw InputError(std::string("group: ") + key + " has wrong extent");
        for (const auto& rj : tj) t.push_back(rj.get<std::vector<int>>());
        return t;
    };
    FiniteGroup S(table("product_S", ns), "S");
    FiniteGroup N(table("product_N", nn), "N");
    return SemidirectProduct(std::move(S), std::move(N), table("action", ns),
                             "custom");
}

SemidirectProduct catalog_group(const std::string& name) {
    if (name == "S3") return SemidirectProduct::s3();
    if (name == "Z4xZ2") return SemidirectProduct::z4_z2();
    if (name.size() >= 2 && name[0] == 'Z') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        if (digits) {
            const int n = std::stoi(name.substr(1));
            if (n >= 1 && n <= 16)
                return SemidirectProduct::trivial_s(FiniteGroup::cyclic(n), name);
        }
    }
    throw InputError("unknown group name: " + name);
}

} // namespace hpq::io
