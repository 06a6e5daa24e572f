#include "ybpa/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "json.hpp"

namespace ybpa {

using nlohmann::json;

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

std::string elem_string(const Presentation& p, const FreeElem& f) {
  std::string s;
  for (auto& [w, c] : f.terms) s += "(" + c.to_string() + ")[" + p.word_string(w) + "] ";
  return s;
}

}  // namespace

std::string presentation_fingerprint(const Presentation& p, int overlap_cap, int length_cap) {
  std::ostringstream os;
  os << "v" << kCacheVersion << "\n" << p.name << " n=" << p.n << " caps=" << overlap_cap << "," << length_cap << "\n";
  for (auto& f : p.families) os << f << " ";
  os << "\n";
  if (p.alphabet)
    for (int v = 0; v < p.alphabet->size(); ++v) os << p.alphabet->names[v] << ":" << int(p.alphabet->reality[v]) << " ";
  os << "\n";
  for (auto& r : p.relations) os << elem_string(p, r) << "\n";
  os << "closure " << p.closure_identity.to_string();
  for (auto& c : p.closure_letter) os << " " << c.to_string();
  os << "\n";
  for (size_t f = 0; f < p.star_letter.size(); ++f)
    for (int i = 1; i < p.n; ++i) os << "star " << p.families[f] << i << " = " << elem_string(p, p.star_letter[f](i)) << "\n";
  for (auto& [k, v] : p.params) os << k << "=" << v.to_string() << "\n";
  return os.str();
}

namespace {

json poly_json(const MultiPoly& p, int nv) {
  json out = json::array();
  for (auto& [m, c] : p.terms) {
    std::vector<int> e;
    for (int v = 0; v < nv; ++v) e.push_back(mono_exp(m, v));
    out.push_back({e, c.re.get_str(), c.im.get_str()});
  }
  return out;
}

MultiPoly poly_from(const json& j) {
  std::vector<MultiPoly::Term> t;
  for (auto& term : j) {
    std::vector<int> e = term[0].get<std::vector<int>>();
    e.resize(kMaxVars);
    t.push_back({mono_from_exps(e), GQ(mpq_class(term[1].get<std::string>()), mpq_class(term[2].get<std::string>()))});
  }
  return MultiPoly::from_terms(std::move(t));
}

json sparse_json(const Sparse& s, int nv) {
  json out = json::array();
  for (auto& [k, c] : s) out.push_back({k, {{"num", poly_json(c.num(), nv)}, {"den", poly_json(c.den(), nv)}}});
  return out;
}

Sparse sparse_from(const json& j, const AlphabetPtr& a) {
  Sparse s;
  for (auto& e : j) s.push_back({e[0].get<int>(), RationalFn(a, poly_from(e[1]["num"]), poly_from(e[1]["den"]))});
  return s;
}

json rows_json(const std::vector<Sparse>& rows, int nv) {
  json out = json::array();
  for (auto& r : rows) out.push_back(sparse_json(r, nv));
  return out;
}

std::vector<Sparse> rows_from(const json& j, const AlphabetPtr& a) {
  std::vector<Sparse> out;
  for (auto& r : j) out.push_back(sparse_from(r, a));
  return out;
}

}  // namespace

std::string PresentedTower::cache_key(int n) const {
  std::string fp = presentation_fingerprint(factory_(n), overlap_cap_, length_cap_);
  if (n > 0) fp += presentation_fingerprint(factory_(n - 1), overlap_cap_, length_cap_);
  return fnv1a_hex(fp);
}

std::string PresentedTower::cache_file(int n) const {
  return (std::filesystem::path(cache_dir_) / (name_ + "-n" + std::to_string(n) + "-" + cache_key(n) + ".json"))
      .string();
}

bool PresentedTower::load_cached(int n, LevelData& out) const {
  std::ifstream in(cache_file(n));
  if (!in) {
    ++cache_misses_;
    return false;
  }
  try {
    json j = json::parse(in);
    if (j.at("format") != "ybpa-basis-table" || j.at("version") != kCacheVersion || j.at("algebra") != name_ ||
        j.at("n") != n || j.at("key") != cache_key(n))
      throw std::runtime_error("header mismatch");
    std::string stored = j.at("content_hash");
    j.erase("content_hash");
    if (fnv1a_hex(j.dump()) != stored) throw std::runtime_error("content hash mismatch");
    int nv = alphabet_ ? alphabet_->size() : 0;
    if (int(j.at("alphabet").size()) != nv) throw std::runtime_error("alphabet mismatch");
    for (int v = 0; v < nv; ++v)
      if (j["alphabet"][v].at("name") != alphabet_->names[v]) throw std::runtime_error("alphabet mismatch");
    LevelData ld;
    FiniteAlgebra& A = ld.alg;
    A.n = n;
    A.alphabet = alphabet_;
    A.labels = j.at("labels").get<std::vector<std::string>>();
    A.unit = j.at("unit");
    for (auto& row : j.at("table")) A.table.push_back(rows_from(row, alphabet_));
    A.star = rows_from(j.at("star"), alphabet_);
    for (auto& [name, s] : j.at("generators").items()) A.generators[name] = sparse_from(s, alphabet_);
    ld.include_below = rows_from(j.at("include_below"), alphabet_);
    ld.shift_below = rows_from(j.at("shift_below"), alphabet_);
    ld.ptrace_down = rows_from(j.at("ptrace_down"), alphabet_);
    out = std::move(ld);
    ++cache_hits_;
    return true;
  } catch (const std::exception&) {
    ++cache_rejected_;
    return false;
  }
}

void PresentedTower::store_cached(int n, const LevelData& ld) const {
  int nv = alphabet_ ? alphabet_->size() : 0;
  const FiniteAlgebra& A = ld.alg;
  json j;
  j["format"] = "ybpa-basis-table";
  j["version"] = kCacheVersion;
  j["algebra"] = name_;
  j["n"] = n;
  j["key"] = cache_key(n);
  j["alphabet"] = json::array();
  for (int v = 0; v < nv; ++v)
    j["alphabet"].push_back({{"name", alphabet_->names[v]}, {"reality", int(alphabet_->reality[v])}});
  j["labels"] = A.labels;
  j["unit"] = A.unit;
  j["table"] = json::array();
  for (auto& row : A.table) j["table"].push_back(rows_json(row, nv));
  j["star"] = rows_json(A.star, nv);
  j["generators"] = json::object();
  for (auto& [name, s] : A.generators) j["generators"][name] = sparse_json(s, nv);
  j["include_below"] = rows_json(ld.include_below, nv);
  j["shift_below"] = rows_json(ld.shift_below, nv);
  j["ptrace_down"] = rows_json(ld.ptrace_down, nv);
  j["content_hash"] = fnv1a_hex(j.dump());
  std::filesystem::create_directories(cache_dir_);
  // Writers may race on the same level; each gets its own temporary.
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
  std::string path = cache_file(n), tmp = path + suffix.str();
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
  ++cache_written_;
}

}  // namespace ybpa
