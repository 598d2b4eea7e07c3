#include "chessboard/json_io.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chessboard {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void to_json(nlohmann::json& out, const ExactScalar& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int t = 0; t < 8; ++t) arr.push_back(rational_str(s.coeff(t)));
    out = nlohmann::json{{"c", std::move(arr)}};
}

void from_json(const nlohmann::json& in, ExactScalar& s) {
    const auto& arr = in.at("c");
    if (!arr.is_array() || arr.size() != 8)
        throw std::invalid_argument("ExactScalar: \"c\" must be an array of 8 strings");
    ExactScalar::Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = parse_rational(arr[t].get<std::string>());
    s = ExactScalar(std::move(c));
}

void to_json(nlohmann::json& out, const CubicMatrix& a) {
    nlohmann::json entries = nlohmann::json::array();
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) {
                const ExactScalar& v = a.at(i, k, m);
                if (!v.is_zero())
                    entries.push_back({{"i", i}, {"k", k}, {"m", m}, {"v", v}});
            }
    out = nlohmann::json{{"n", n}, {"entries", std::move(entries)}};
}

CubicMatrix cubic_from_json(const nlohmann::json& in) {
    CubicMatrix a(in.at("n").get<int>());
    for (const auto& e : in.at("entries"))
        a.at(e.at("i").get<int>(), e.at("k").get<int>(), e.at("m").get<int>()) =
            e.at("v").get<ExactScalar>();
    return a;
}

namespace {

std::string sparse_result_str(const std::vector<SparseEntry>& result) {
    std::string out;
    for (const auto& e : result) {
        if (!out.empty()) out += ';';
        out += std::to_string(e.i) + ',' + std::to_string(e.k) + ',' +
               std::to_string(e.m) + ':' + e.v.str();
    }
    return out;
}

}  // namespace

nlohmann::json table_to_json(const TernaryTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json result = nlohmann::json::array();
        for (const auto& e : row.result)
            result.push_back({{"i", e.i}, {"k", e.k}, {"m", e.m}, {"v", e.v}});
        rows.push_back({{"lhs", row.lhs},
                        {"mid", row.mid},
                        {"rhs", row.rhs},
                        {"result", std::move(result)}});
    }
    return rows;
}

std::string table_to_csv(const TernaryTable& table) {
    std::string out = "lhs,mid,rhs,result\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.lhs) + ',' + std::to_string(row.mid) + ',' +
               std::to_string(row.rhs) + ",\"" + sparse_result_str(row.result) + "\"\n";
    }
    return out;
}

void to_json(nlohmann::json& out, const GradedMatrix& g) {
    const auto e = g.entries();
    out = nlohmann::json{
        {"grade", g.grade()}, {"alpha", e[0]}, {"beta", e[1]}, {"gamma", e[2]}};
}

GradedMatrix graded_from_json(const nlohmann::json& in) {
    return {in.at("grade").get<int>(),
            {in.at("alpha").get<ExactScalar>(), in.at("beta").get<ExactScalar>(),
             in.at("gamma").get<ExactScalar>()}};
}

void to_json(nlohmann::json& out, const GrassmannElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : x.terms()) terms.push_back({{"word", w}, {"coeff", c}});
    out = nlohmann::json{
        {"n", x.n()}, {"conjugates", x.with_conjugates()}, {"terms", std::move(terms)}};
}

GrassmannElement grassmann_from_json(const nlohmann::json& in) {
    const GrassmannAlgebra alg(in.at("n").get<int>(), in.at("conjugates").get<bool>());
    GrassmannElement out = alg.zero();
    for (const auto& term : in.at("terms"))
        out += term.at("coeff").get<ExactScalar>() *
               alg.reduce(term.at("word").get<GrassmannWord>());
    return out;
}

void to_json(nlohmann::json& out, const ConnectionJet& jet) {
    const int n = jet.n();
    nlohmann::json g, dg, d2g;
    for (int l = 1; l <= n; ++l) {
        nlohmann::json rows;
        for (int i = 1; i <= n; ++i) {
            nlohmann::json row;
            for (int k = 1; k <= n; ++k) row.push_back(jet.gamma(l, i, k));
            rows.push_back(std::move(row));
        }
        g.push_back(std::move(rows));
    }
    for (int m = 1; m <= n; ++m) {
        nlohmann::json block;
        for (int l = 1; l <= n; ++l) {
            nlohmann::json rows;
            for (int i = 1; i <= n; ++i) {
                nlohmann::json row;
                for (int k = 1; k <= n; ++k) row.push_back(jet.dgamma(m, l, i, k));
                rows.push_back(std::move(row));
            }
            block.push_back(std::move(rows));
        }
        dg.push_back(std::move(block));
    }
    for (int a = 1; a <= n; ++a) {
        nlohmann::json outer;
        for (int b = 1; b <= n; ++b) {
            nlohmann::json block;
            for (int l = 1; l <= n; ++l) {
                nlohmann::json rows;
                for (int i = 1; i <= n; ++i) {
                    nlohmann::json row;
                    for (int k = 1; k <= n; ++k)
                        row.push_back(jet.d2gamma(a, b, l, i, k));
                    rows.push_back(std::move(row));
                }
                block.push_back(std::move(rows));
            }
            outer.push_back(std::move(block));
        }
        d2g.push_back(std::move(outer));
    }
    out = nlohmann::json{{"n", n},
                         {"gamma", std::move(g)},
                         {"dgamma", std::move(dg)},
                         {"d2gamma", std::move(d2g)}};
}

ConnectionJet jet_from_json(const nlohmann::json& in) {
    const int n = in.at("n").get<int>();
    ConnectionJet jet(n);
    const auto& g = in.at("gamma");
    const auto& dg = in.at("dgamma");
    const auto& d2g = in.at("d2gamma");
    for (int l = 1; l <= n; ++l)
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                jet.gamma(l, i, k) = g.at(l - 1).at(i - 1).at(k - 1).get<ExactScalar>();
                for (int m = 1; m <= n; ++m)
                    jet.dgamma(m, l, i, k) =
                        dg.at(m - 1).at(l - 1).at(i - 1).at(k - 1).get<ExactScalar>();
                for (int a = 1; a <= n; ++a)
                    for (int b = a; b <= n; ++b) {
                        const ExactScalar v = d2g.at(a - 1)
                                                  .at(b - 1)
                                                  .at(l - 1)
                                                  .at(i - 1)
                                                  .at(k - 1)
                                                  .get<ExactScalar>();
                        if (v != d2g.at(b - 1)
                                     .at(a - 1)
                                     .at(l - 1)
                                     .at(i - 1)
                                     .at(k - 1)
                                     .get<ExactScalar>())
                            throw std::invalid_argument(
                                "jet: second derivatives must be symmetric");
                        jet.d2gamma(a, b, l, i, k) = v;
                    }
            }
    return jet;
}

void to_json(nlohmann::json& out, const ApproxComplex& z) {
    out = nlohmann::json::array({z.re, z.im});
}

void from_json(const nlohmann::json& in, ApproxComplex& z) {
    if (!in.is_array() || in.size() != 2)
        throw std::invalid_argument("ApproxComplex: expected [re, im]");
    z.re = in[0].get<double>();
    z.im = in[1].get<double>();
}

}  // namespace chessboard
