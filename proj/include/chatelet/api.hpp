#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chatelet/verify.hpp"

namespace chatelet {

// JSON-producing entry points shared by the CLI and the python bindings.
// All element arguments are descriptor strings ("5", "-1/3", "[1,2/5]").

nlohmann::json klein_to_json(const KleinElem& g);
nlohmann::json subgroup_to_json(const KleinSubgroup& s);
nlohmann::json chow_result_to_json(const ChowResult& r);

nlohmann::json api_classify(const std::string& field, const std::string& d,
                            const std::string& e1, const std::string& e2);
nlohmann::json api_theta(const std::string& field, const std::string& d, const std::string& e1,
                         const std::string& e2, const std::string& x);
nlohmann::json api_oracle(const std::string& field, const std::string& d, const std::string& e1,
                          const std::string& e2, std::optional<long> depth);
nlohmann::json api_lemmas(long qmax);
nlohmann::json api_restrict(const std::string& field, const std::string& d, const std::string& e1,
                            const std::string& e2, const std::string& ext);
nlohmann::json api_delpezzo(const std::string& field, const std::string& d, const std::string& a,
                            const std::string& c);
nlohmann::json api_verify(const std::optional<std::string>& matrix_json, long qmax,
                          std::optional<long> depth);

std::vector<MatrixEntry> matrix_from_json(const std::string& text);

}  // namespace chatelet
