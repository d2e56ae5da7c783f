#include "hkt/lattice_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hkt/error.hpp"

namespace hkt {
namespace {

using nlohmann::json;

void put_hyperbolic_plane(Matrix<Integer>& g, std::size_t at) {
    g(at, at + 1) = 1;
    g(at + 1, at) = 1;
}

std::array<RationalVector, 3> hyperbolic_triple(std::size_t rank) {
    std::array<RationalVector, 3> t;
    for (std::size_t a = 0; a < 3; ++a) {
        t[a] = RationalVector(rank);
        t[a][2 * a] = 1;
        t[a][2 * a + 1] = 1;
    }
    return t;
}

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.dump(), 10);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected an integer or \"p/q\" string, got " + v.dump());
}

Integer integer_from_json(const json& v) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "gram entries must be integers, got " + v.dump());
    return Integer(v.dump(), 10);
}

}  // namespace

Matrix<Integer> e8_gram() {
    Matrix<Integer> g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    static constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [i, j] : edges) g(i, j) = g(j, i) = -1;
    return g;
}

bool is_builtin_lattice(std::string_view name) { return name == "U3" || name == "K3" || name == "diag222"; }

LatticeSpec builtin_lattice(std::string_view name) {
    if (name == "U3") {
        Matrix<Integer> g(6, 6);
        for (std::size_t b = 0; b < 3; ++b) put_hyperbolic_plane(g, 2 * b);
        return {"U3", GramLattice(std::move(g)), hyperbolic_triple(6)};
    }
    if (name == "K3") {
        Matrix<Integer> g(22, 22);
        for (std::size_t b = 0; b < 3; ++b) put_hyperbolic_plane(g, 2 * b);
        const auto e8 = e8_gram();
        for (std::size_t block = 0; block < 2; ++block) {
            const std::size_t off = 6 + 8 * block;
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j) g(off + i, off + j) = -e8(i, j);
        }
        return {"K3", GramLattice(std::move(g)), hyperbolic_triple(22)};
    }
    if (name == "diag222") {
        Matrix<Integer> g(3, 3);
        std::array<RationalVector, 3> t;
        for (std::size_t a = 0; a < 3; ++a) {
            g(a, a) = 2;
            t[a] = RationalVector(3);
            t[a][a] = 1;
        }
        return {"diag222", GramLattice(std::move(g)), std::move(t)};
    }
    throw Error(ErrorKind::ParseError, "unknown built-in lattice '" + std::string(name) + "' (expected U3, K3 or diag222)");
}

LatticeSpec parse_lattice_json(std::string_view text, std::string name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("gram") || !doc.contains("triple"))
        throw Error(ErrorKind::ParseError, "lattice JSON needs \"gram\" and \"triple\"");

    const json& gram = doc["gram"];
    if (!gram.is_array() || gram.empty()) throw Error(ErrorKind::ParseError, "\"gram\" must be a non-empty array of rows");
    const std::size_t r = gram.size();
    if (doc.contains("rank")) {
        if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() != static_cast<long long>(r))
            throw Error(ErrorKind::DimensionMismatch,
                        "\"rank\" is " + doc["rank"].dump() + " but gram has " + std::to_string(r) + " rows");
    }
    Matrix<Integer> g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!gram[i].is_array() || gram[i].size() != r)
            throw Error(ErrorKind::DimensionMismatch, "gram row " + std::to_string(i) + " does not have " +
                                                          std::to_string(r) + " entries");
        for (std::size_t j = 0; j < r; ++j) g(i, j) = integer_from_json(gram[i][j]);
    }

    const json& triple = doc["triple"];
    if (!triple.is_array() || triple.size() != 3)
        throw Error(ErrorKind::ParseError, "\"triple\" must hold exactly three vectors");
    std::array<RationalVector, 3> t;
    for (std::size_t a = 0; a < 3; ++a) {
        if (!triple[a].is_array() || triple[a].size() != r)
            throw Error(ErrorKind::DimensionMismatch,
                        "triple vector " + std::to_string(a) + " does not have " + std::to_string(r) + " entries");
        for (const auto& v : triple[a]) t[a].push_back(rational_from_json(v));
    }
    return {std::move(name), GramLattice(std::move(g)), std::move(t)};
}

LatticeSpec load_lattice_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open lattice file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_lattice_json(ss.str(), path.string());
}

LatticeSpec load_lattice(std::string_view source) {
    if (is_builtin_lattice(source)) return builtin_lattice(source);
    return load_lattice_file(std::filesystem::path(std::string(source)));
}

std::string to_json(const LatticeSpec& spec) {
    json doc;
    const std::size_t r = spec.lattice.rank();
    doc["rank"] = r;
    json gram = json::array();
    for (std::size_t i = 0; i < r; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r; ++j) row.push_back(spec.lattice.gram()(i, j).get_si());
        gram.push_back(row);
    }
    doc["gram"] = gram;
    json triple = json::array();
    for (const auto& w : spec.triple) {
        json v = json::array();
        for (const auto& x : w) {
            if (x.get_den() == 1 && x.get_num().fits_slong_p())
                v.push_back(x.get_num().get_si());
            else
                v.push_back(x.get_str());
        }
        triple.push_back(v);
    }
    doc["triple"] = triple;
    return doc.dump();
}

}  // namespace hkt
