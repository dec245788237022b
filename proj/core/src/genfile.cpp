#include "piset/genfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "piset/errors.hpp"

namespace piset {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::uint64_t require_uint(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_unsigned()) throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<Word> word_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidInput(where + ": expected an array of integers");
  std::vector<Word> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned() || v[i].get<std::uint64_t>() > UINT32_MAX)
      throw InvalidInput(where + "[" + std::to_string(i) + "]: expected a non-negative 32-bit integer");
    out.push_back(v[i].get<Word>());
  }
  return out;
}

Group parse_perm(const json& doc) {
  const std::uint64_t degree = require_uint(doc, "degree");
  if (degree == 0 || degree > (1u << 20)) throw InvalidInput("field 'degree' must lie in [1, 2^20]");
  const json& gens = require(doc, "generators");
  if (!gens.is_array() || gens.empty()) throw InvalidInput("field 'generators' must be a nonempty array");
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    std::vector<Word> images = word_list(gens[g], where);
    if (images.size() != degree)
      throw InvalidInput(where + ": expected " + std::to_string(degree) + " images, got " +
                         std::to_string(images.size()));
    try {
      perms.emplace_back(std::move(images));
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": not a permutation: " + e.what());
    }
  }
  return Group::from_permutations(perms);
}

Group parse_mat(const json& doc) {
  const std::uint64_t p = require_uint(doc, "p");
  const std::uint64_t k = require_uint(doc, "k");
  const std::uint64_t dim = require_uint(doc, "dim");
  if (p > UINT32_MAX || k == 0 || k > 64) throw InvalidInput("fields 'p'/'k' out of range");
  if (dim == 0 || dim > 64) throw InvalidInput("field 'dim' must lie in [1, 64]");
  Field field = [&] {
    try {
      return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
    } catch (const Error& e) {
      throw InvalidInput(std::string("fields 'p'/'k': ") + e.what());
    }
  }();
  const json& gens = require(doc, "generators");
  if (!gens.is_array() || gens.empty()) throw InvalidInput("field 'generators' must be a nonempty array");
  std::vector<SquareMatrix> mats;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    std::vector<Word> entries = word_list(gens[g], where);
    if (entries.size() != dim * dim)
      throw InvalidInput(where + ": expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] >= field.size())
        throw InvalidInput(where + "[" + std::to_string(i) + "]: encoding " + std::to_string(entries[i]) +
                           " is not below q = " + std::to_string(field.size()));
    SquareMatrix m(field, dim, std::move(entries));
    if (!m.invertible()) throw InvalidInput(where + ": matrix is singular");
    mats.push_back(std::move(m));
  }
  return Group::from_matrices(mats);
}

}  // namespace

Group parse_generator_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed generator document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("generator document must be a JSON object");
  const json& kind = require(doc, "kind");
  if (kind == "perm") return parse_perm(doc);
  if (kind == "mat") return parse_mat(doc);
  throw InvalidInput("field 'kind' must be \"perm\" or \"mat\"");
}

Group load_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open generator file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_generator_document(buffer.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace piset
