#pragma once

#include <nlohmann/json.hpp>

#include <pellmat/determinant.hpp>
#include <pellmat/matrix.hpp>
#include <pellmat/pell.hpp>

namespace pellmat {

// GaussInt components travel as decimal strings so arbitrary precision
// survives any JSON consumer.
nlohmann::json to_json(const GaussInt& z);
GaussInt gauss_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DenseMatrix& m);
nlohmann::json to_json(const RowExpansion& ex);
nlohmann::json to_json(const IdentityReport& r);

}  // namespace pellmat
