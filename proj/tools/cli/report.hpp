// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "rankcrypt/verify/converse.hpp"
#include "rankcrypt/verify/leakage.hpp"
#include "rankcrypt/verify/zero_error.hpp"

namespace rankcrypt::cli {

// Verification report fragments. Rationals are {num, den} objects and
// witnesses are matrix text blocks.
nlohmann::json to_json(const verify::Rational& r);
nlohmann::json to_json(const verify::LeakageReport& r);
nlohmann::json to_json(const verify::SecrecyVerdict& v);
nlohmann::json to_json(const verify::AdditivityVerdict& v);
nlohmann::json to_json(const verify::ZeroErrorReport& r);
nlohmann::json to_json(const verify::TradeoffReport& r);
nlohmann::json to_json(const verify::ConverseReport& r);
nlohmann::json to_json(const verify::RateGateReport& r);

}  // namespace rankcrypt::cli
