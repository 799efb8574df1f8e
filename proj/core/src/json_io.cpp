#include <pellmat/json_io.hpp>

namespace pellmat {

using nlohmann::json;

json to_json(const GaussInt& z) {
    return json{{"re", z.re.get_str()}, {"im", z.im.get_str()}};
}

GaussInt gauss_from_json(const json& j) {
    return GaussInt(mpz_class(j.at("re").get<std::string>()),
                    mpz_class(j.at("im").get<std::string>()));
}

json to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const RowExpansion& ex) {
    json terms = json::array();
    for (const auto& t : ex.terms) {
        terms.push_back(json{{"cols", t.cols.values()},
                             {"block", to_json(t.block_det)},
                             {"cofactor", to_json(t.cofactor)},
                             {"product", to_json(t.signed_product)}});
    }
    return json{{"rows", ex.rows.values()}, {"terms", std::move(terms)},
                {"total", to_json(ex.total)}};
}

json to_json(const IdentityReport& r) {
    return json{{"identity", identity_str(r.id)}, {"parameters", r.params},
                {"lhs", to_json(r.lhs)},          {"rhs", to_json(r.rhs)},
                {"engine", engine_str(r.engine)}, {"verdict", r.verdict},
                {"notes", r.notes}};
}

}  // namespace pellmat
