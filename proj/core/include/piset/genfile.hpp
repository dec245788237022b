#pragma once

#include <filesystem>
#include <string>

#include "piset/engine.hpp"

namespace piset {

/// Reads a generator document:
///
///   { "kind": "perm", "degree": n, "generators": [[images...], ...] }
///   { "kind": "mat", "p": p, "k": k, "dim": n, "generators": [[row-major encodings...], ...] }
///
/// Points are 0-based; matrix entries are GF(p^k) encodings. Throws
/// InvalidInput naming the offending line/column or field path.
Group parse_generator_document(const std::string& text);
Group load_generator_file(const std::filesystem::path& path);

}  // namespace piset
