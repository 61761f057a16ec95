#pragma once

#include <string>
#include <vector>

#include "ccsurg/provenance.hpp"
#include "json.hpp"

namespace ccsurg::cli {

enum class Status { ok, error };

struct CommandResult {
    Status status = Status::ok;
    /// 0 iff status is ok.
    int exit_code = 0;
    nlohmann::json payload = nlohmann::json::object();
    std::vector<Axiom> provenance;
    /// What goes to stdout (ok) or stderr (error): the compact JSON document when --json
    /// was given, readable text otherwise.
    std::string text;
};

/// argv without the program name, e.g. {"dedekind", "--q", "1", "--p", "9"}.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace ccsurg::cli
