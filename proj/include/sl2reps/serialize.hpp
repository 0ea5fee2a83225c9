#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sl2reps/cyclotomic.hpp"
#include "sl2reps/irreps.hpp"
#include "sl2reps/matrix.hpp"
#include "sl2reps/rep.hpp"
#include "sl2reps/sl2.hpp"
#include "sl2reps/symm.hpp"

namespace sl2reps {

struct JsonOptions {
    bool approx = true;
    int precision = 15;  // significant digits of the "approx" floats
};

// Malformed input; pointer is a JSON pointer to the offending value.
class schema_error : public std::invalid_argument {
public:
    schema_error(std::string pointer, const std::string& what)
        : std::invalid_argument(pointer + ": " + what), pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

nlohmann::json to_json(const Cyclotomic& c, const JsonOptions& o = {});
Cyclotomic cyclotomic_from_json(const nlohmann::json& j, const std::string& ptr = "");

nlohmann::json to_json(const CMatrix& m, const JsonOptions& o = {});
CMatrix matrix_from_json(const nlohmann::json& j, const std::string& ptr = "");

nlohmann::json to_json(const Rep& r, const JsonOptions& o = {});
// Validates shapes and the stored level against the t entries.
Rep rep_from_json(const nlohmann::json& j, const std::string& ptr = "");

nlohmann::json to_json(const IrrepRecord& r, const JsonOptions& o = {});
nlohmann::json to_json(const Catalogue& c, const JsonOptions& o = {});  // array of records
std::string catalogue_csv(const Catalogue& c);

// Witness indices are written 1-based.
nlohmann::json to_json(const SymmetrizationResult& r, const JsonOptions& o = {});
nlohmann::json to_json(const CongruenceReport& r);

// Two-space indented dump with a trailing newline; keys are sorted.
std::string canonical_dump(const nlohmann::json& j);
nlohmann::json parse_json_text(const std::string& text);  // schema_error on syntax errors

}  // namespace sl2reps
