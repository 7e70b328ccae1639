#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cosep/cohomology.hpp"

namespace cosep {

inline constexpr int kReportSchemaVersion = 1;

enum class ExitCode { Completed = 0, Parse = 2, Validation = 3, Budget = 4, Internal = 5 };

struct CommandRequest {
    std::string command;  // validate | cosep | spaces | ext | universal | battery | coext
    std::string path;
    std::string n = "regular";
    std::string m = "regular";
    std::size_t max_degree = kDefaultMaxDegree;
    std::size_t budget = kDefaultBudget;
};

struct CommandResult {
    ExitCode exit = ExitCode::Completed;
    nlohmann::json report;
};

/// Runs one command on the text of a definition file. Never throws; errors
/// become an "error" block and a nonzero exit code.
CommandResult run_command(const CommandRequest& req, std::string_view text);

enum class Format { Human, Json };
std::string render(const nlohmann::json& report, Format format);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

nlohmann::json to_json(const Field& f, const Matrix& m);
nlohmann::json to_json(const Field& f, const Vector& v);
nlohmann::json to_json(const CheckReport& r);

}  // namespace cosep
