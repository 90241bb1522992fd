// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risvlc/experiment.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace risvlc {

/// File-system failure while reading or writing.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a scenario document. Missing keys take their defaults; unknown keys
/// and invalid values raise ConfigError with the dotted field path.
Scenario scenario_from_json(const nlohmann::json& doc);

/// Full document with every field spelled out; scenario_from_json inverts it.
nlohmann::json scenario_to_json(const Scenario& s);

/// Reads and parses a config file. Missing or unreadable files raise IoError,
/// malformed JSON raises ConfigError.
Scenario parse_config(const std::filesystem::path& path);

}  // namespace risvlc
