#include "model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pdl {

Signature Signature::of(std::vector<std::string> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.size() > k_max_signature)
    throw GuardError("signature exceeds " + std::to_string(k_max_signature) + " symbols");
  for (const auto& s : symbols)
    if (s.empty()) throw ArgError("empty symbol in signature");
  Signature out;
  out.symbols_ = std::move(symbols);
  return out;
}

Signature Signature::merged(const Signature& a, const Signature& b) {
  std::vector<std::string> all = a.symbols_;
  all.insert(all.end(), b.symbols_.begin(), b.symbols_.end());
  return Signature::of(std::move(all));
}

int Signature::index_of(std::string_view name) const noexcept {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end() || *it != name) return -1;
  return static_cast<int>(it - symbols_.begin());
}

bool Signature::subset_of(const Signature& other) const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&other](const std::string& s) { return other.contains(s); });
}

SDModel SDModel::make(Signature sig, std::vector<WorldMask> worlds) {
  const WorldMask width_mask =
      sig.size() >= 32 ? ~WorldMask{0} : ((WorldMask{1} << sig.size()) - 1);
  std::unordered_set<WorldMask> seen;
  for (WorldMask w : worlds) {
    if ((w & ~width_mask) != 0) throw ArgError("world has bits beyond the signature");
    if (!seen.insert(w).second) throw ArgError("duplicate world");
  }
  return SDModel{std::move(sig), std::move(worlds)};
}

bool SDModel::same_worlds(const SDModel& other) const {
  if (worlds.size() != other.worlds.size()) return false;
  std::vector<WorldMask> a = worlds, b = other.worlds;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SDModel restrict_model(const SDModel& w, const Signature& phi) {
  std::vector<int> from;
  from.reserve(phi.size());
  for (const auto& s : phi.symbols()) {
    const int idx = w.sig.index_of(s);
    if (idx < 0) throw ArgError("unknown symbol in restriction: " + s);
    from.push_back(idx);
  }
  std::vector<WorldMask> worlds;
  std::unordered_set<WorldMask> seen;
  for (WorldMask m : w.worlds) {
    WorldMask proj = 0;
    for (std::size_t i = 0; i < from.size(); ++i)
      proj |= ((m >> from[i]) & 1u) << i;
    if (seen.insert(proj).second) worlds.push_back(proj);
  }
  return SDModel{phi, std::move(worlds)};
}

bool phi_equivalent(const SDModel& w1, const SDModel& w2, const Signature& phi) {
  return restrict_model(w1, phi).same_worlds(restrict_model(w2, phi));
}

std::vector<WorldMask> enumerate_worlds(const Signature& phi) {
  if (phi.size() > k_max_signature)
    throw GuardError("world enumeration limited to " + std::to_string(k_max_signature) +
                     " symbols");
  const std::size_t count = std::size_t{1} << phi.size();
  std::vector<WorldMask> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<WorldMask>(i);
  return out;
}

SDModel full_model(const Signature& phi) {
  return SDModel{phi, enumerate_worlds(phi)};
}

std::uint64_t model_count(const Signature& phi) {
  if (phi.size() > k_max_enum_signature)
    throw GuardError("model enumeration limited to " +
                     std::to_string(k_max_enum_signature) + " symbols");
  return std::uint64_t{1} << (std::size_t{1} << phi.size());
}

SDModel model_from_index(const Signature& phi, std::uint64_t index) {
  const std::uint64_t count = model_count(phi);
  if (index >= count) throw ArgError("model index out of range");
  std::vector<WorldMask> worlds;
  const std::size_t universe = std::size_t{1} << phi.size();
  for (std::size_t w = 0; w < universe; ++w)
    if ((index >> w) & 1u) worlds.push_back(static_cast<WorldMask>(w));
  return SDModel{phi, std::move(worlds)};
}

// ── .sdm parsing ────────────────────────────────────────────────────────

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_symbol(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

SDModel parse_sdm(std::string_view text) {
  bool have_sig = false;
  Signature sig;
  std::vector<WorldMask> worlds;
  std::unordered_set<WorldMask> seen;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (toks[0] == "sig") {
      if (have_sig) throw IoError("duplicate sig line (" + where + ")");
      std::vector<std::string> symbols(toks.begin() + 1, toks.end());
      for (const auto& s : symbols)
        if (!valid_symbol(s)) throw IoError("bad symbol '" + s + "' (" + where + ")");
      std::unordered_set<std::string> dup(symbols.begin(), symbols.end());
      if (dup.size() != symbols.size())
        throw IoError("duplicate symbol in sig (" + where + ")");
      sig = Signature::of(std::move(symbols));
      have_sig = true;
    } else if (toks[0] == "w") {
      if (!have_sig) throw IoError("world before sig line (" + where + ")");
      if (toks.size() < 2)
        throw IoError("world line needs symbols or '-' (" + where + ")");
      WorldMask m = 0;
      if (!(toks.size() == 2 && toks[1] == "-")) {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          const int idx = sig.index_of(toks[i]);
          if (idx < 0) throw IoError("unknown symbol '" + toks[i] + "' (" + where + ")");
          m |= WorldMask{1} << idx;
        }
      }
      if (!seen.insert(m).second) throw IoError("duplicate world (" + where + ")");
      worlds.push_back(m);
    } else {
      throw IoError("unknown directive '" + toks[0] + "' (" + where + ")");
    }
  }
  if (!have_sig) throw IoError("missing sig line");
  return SDModel{std::move(sig), std::move(worlds)};
}

SDModel read_sdm_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open model file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_sdm(ss.str());
}

std::string write_sdm(const SDModel& m) {
  std::string out = "sig";
  for (const auto& s : m.sig.symbols()) {
    out += ' ';
    out += s;
  }
  out += '\n';
  for (WorldMask w : m.worlds) {
    out += 'w';
    if (w == 0) {
      out += " -";
    } else {
      for (std::size_t i = 0; i < m.sig.size(); ++i)
        if ((w >> i) & 1u) {
          out += ' ';
          out += m.sig.symbols()[i];
        }
    }
    out += '\n';
  }
  return out;
}

}  // namespace pdl
