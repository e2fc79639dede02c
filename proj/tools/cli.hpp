#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "io.hpp"
#include "quadpow/constructions.hpp"

namespace quadpow::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchema = "quadpow/1";

enum ExitCode { kPass = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Corpus directory: $QUADPOW_CATALOG_DIR, else the bundled one.
std::string catalog_dir();

/// Corpus file document for a catalog entry.
io::Json entry_json(const CatalogEntry& e);

}  // namespace quadpow::cli
