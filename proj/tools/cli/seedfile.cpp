#include "cli/seedfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "tropf/errors.hpp"

namespace tropf::cli {

namespace {

using nlohmann::json;

struct Located {
  const std::string& origin;

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(origin + ": at " + (pointer.empty() ? "/" : pointer) + ": " + what);
  }

  std::int64_t integer(const json& j, const std::string& pointer) const {
    if (!j.is_number_integer()) fail(pointer, "expected an integer, found " + std::string(j.type_name()));
    return j.get<std::int64_t>();
  }

  IntVec vector(const json& j, const std::string& pointer, std::size_t len) const {
    if (!j.is_array()) fail(pointer, "expected an array");
    if (j.size() != len) fail(pointer, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    IntVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], pointer + "/" + std::to_string(i)));
    return out;
  }

  IntMatrix matrix(const json& j, const std::string& pointer, std::size_t rows, std::size_t cols) const {
    if (!j.is_array()) fail(pointer, "expected an array of rows");
    if (j.size() != rows) fail(pointer, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < rows; ++i) out.push_back(vector(j[i], pointer + "/" + std::to_string(i), cols));
    return IntMatrix::from_rows(out);
  }
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

RootConfig parse_seed_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the offset one past the offending byte
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

  const Located at{origin};
  if (!doc.is_object()) at.fail("", "seed file must be a JSON object");
  static const std::set<std::string> known{"n", "m", "B", "lambda", "lambda0", "S", "names"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) at.fail("/" + key, "unknown key");
  for (const char* key : {"n", "m", "B"})
    if (!doc.contains(key)) at.fail("", std::string("missing key \"") + key + "\"");

  const auto n64 = at.integer(doc["n"], "/n");
  const auto m64 = at.integer(doc["m"], "/m");
  if (n64 < 1) at.fail("/n", "n must be positive");
  if (m64 < n64) at.fail("/m", "m must be at least n");
  const auto n = static_cast<std::size_t>(n64), m = static_cast<std::size_t>(m64);

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& jn = doc["names"];
    if (!jn.is_array() || jn.size() != m) at.fail("/names", "expected an array of " + std::to_string(m) + " strings");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < m; ++i) {
      const std::string pointer = "/names/" + std::to_string(i);
      if (!jn[i].is_string()) at.fail(pointer, "expected a string");
      const std::string name = jn[i].get<std::string>();
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
          name.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_'") != std::string::npos)
        at.fail(pointer, "names must be identifiers");
      if (!seen.insert(name).second) at.fail(pointer, "duplicate name \"" + name + "\"");
      // xN may only name the N-th variable, otherwise expressions become ambiguous
      if (name.size() > 1 && name[0] == 'x' && name.find_first_not_of("0123456789", 1) == std::string::npos &&
          name != "x" + std::to_string(i + 1))
        at.fail(pointer, "\"" + name + "\" would shadow another variable");
      names.push_back(name);
    }
  }

  const bool has_lambda = doc.contains("lambda");
  const bool has_l0 = doc.contains("lambda0"), has_s = doc.contains("S");
  if (has_lambda && (has_l0 || has_s)) at.fail("/lambda", "give either lambda or lambda0 + S, not both");
  if (has_l0 != has_s) at.fail(has_l0 ? "/S" : "/lambda0", "lambda0 and S must be given together");

  try {
    if (has_l0) {
      if (m != 2 * n) at.fail("/m", "lambda0 + S builds principal coefficients, so m must be 2n");
      const auto& jb = doc["B"];
      IntMatrix b;
      if (jb.is_array() && jb.size() == n) {
        b = at.matrix(jb, "/B", n, n);
      } else {
        const IntMatrix full = at.matrix(jb, "/B", m, n);
        if (full.block(n, 0, n, n) != IntMatrix::identity(n))
          at.fail("/B", "with lambda0 + S the bottom block of B must be the identity");
        b = full.block(0, 0, n, n);
      }
      const IntMatrix l0 = at.matrix(doc["lambda0"], "/lambda0", n, n);
      const IntVec s = at.vector(doc["S"], "/S", n);
      return RootConfig(build_lambda(b, l0, s), names);
    }
    MutationMatrix bt(at.matrix(doc["B"], "/B", m, n));
    if (has_lambda) return RootConfig(check_compatible_pair(bt, at.matrix(doc["lambda"], "/lambda", m, m)), names);
    return RootConfig(bt, names);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.name(), e.kind(), origin + ": " + e.what());
  }
}

RootConfig load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open seed file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_seed_text(ss.str(), path);
}

}  // namespace tropf::cli
