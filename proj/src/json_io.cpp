#include "listsep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace listsep::io {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw DomainError(path + ": " + what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) field_error("<root>", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(key, "missing field");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  std::int64_t v = j.get<std::int64_t>();
  if (v < lo || v > hi) field_error(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

int read_n(const Json& j) {
  return static_cast<int>(as_int(require(j, "n"), "n", 1, kMaxVertices));
}

}  // namespace

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DomainError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Json to_json(Subset s) {
  Json out = Json::array();
  for (Vertex v : s.members()) out.push_back(v);
  return out;
}

Json to_json(const Rational& q) {
  if (denominator(q) == 1) {
    BigInt num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return q.str();
}

Json to_json(const ListAssignment& lists) {
  Json out;
  out["n"] = lists.n();
  Json arr = Json::array();
  for (const ColorSet& l : lists.lists()) arr.push_back(l.elements());
  out["lists"] = std::move(arr);
  return out;
}

Json to_json(const PIVector& v) {
  Json out;
  out["n"] = v.n();
  Json counts = Json::array();
  for (Subset s : canonical_subsets(v.n())) {
    if (v[s] == 0) continue;
    Json entry;
    entry["subset"] = to_json(s);
    entry["size"] = v[s];
    counts.push_back(std::move(entry));
  }
  out["counts"] = std::move(counts);
  return out;
}

Json to_json(const MultiColoring& coloring) {
  Json arr = Json::array();
  for (const ColorSet& c : coloring.assigned) arr.push_back(c.elements());
  return arr;
}

Json to_json(const ChoosabilityVerdict& verdict) {
  Json out;
  out["colorable"] = verdict.colorable;
  out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  out["violating_subset"] = verdict.violating_subset ? to_json(*verdict.violating_subset) : Json(nullptr);
  out["amplitude"] = verdict.violating_amplitude ? Json(*verdict.violating_amplitude) : Json(nullptr);
  return out;
}

Json to_json(const ColorSymResult& result) {
  Json out;
  out["failed"] = !result.ok();
  if (result.ok()) out["assigned"] = to_json(*result.coloring);
  out["w"] = result.w;
  return out;
}

Json to_json(const SepResult& result) {
  Json out;
  out["sep"] = result.value;
  out["certificate"] = to_string(result.certificate);
  out["witness_vertices"] = result.witness_vertices ? Json(*result.witness_vertices) : Json(nullptr);
  out["closed_form"] = result.closed_form ? Json(*result.closed_form) : Json(nullptr);
  out["counterexample"] = result.counterexample ? to_json(*result.counterexample) : Json(nullptr);
  return out;
}

Json to_json(const ConstructionAudit& audit) {
  Json out;
  out["list_sizes"] = audit.list_sizes;
  out["max_pair"] = audit.max_pair;
  out["amplitude"] = audit.amplitude;
  return out;
}

Json to_json(const EquivClassCount& count) {
  Json out;
  out["n"] = count.n;
  out["a"] = count.a;
  out["total"] = to_json(Rational(count.total));
  out["residue_full_empty"] = to_json(Rational(count.residue_full_empty));
  out["residue_tight"] = to_json(Rational(count.residue_tight));
  return out;
}

Json to_json(const DegreeFit& fit) {
  Json out;
  out["n"] = fit.n;
  out["a_max"] = fit.a_max;
  Json values = Json::array();
  for (const BigInt& v : fit.values) values.push_back(to_json(Rational(v)));
  out["values"] = std::move(values);
  out["degree"] = fit.degree ? Json(*fit.degree) : Json(nullptr);
  out["parity_adjusted_degree"] = fit.parity_adjusted_degree ? Json(*fit.parity_adjusted_degree) : Json(nullptr);
  Json coeffs = Json::array();
  for (const Rational& q : fit.coefficients) coeffs.push_back(to_json(q));
  out["coefficients"] = std::move(coeffs);
  out["alternating"] = to_json(fit.alternating);
  return out;
}

Json to_json(const kernel::RationalVector& v) {
  Json arr = Json::array();
  for (const Rational& q : v.entries) arr.push_back(to_json(q));
  return arr;
}

ListAssignment list_assignment_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& lists = require(j, "lists");
  if (!lists.is_array()) field_error("lists", "expected an array");
  if (static_cast<int>(lists.size()) != n)
    field_error("lists", "has " + std::to_string(lists.size()) + " entries, n = " + std::to_string(n));
  std::vector<ColorSet> out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const std::string path = "lists[" + std::to_string(i) + "]";
    if (!lists[i].is_array()) field_error(path, "expected an array");
    ColorSet set;
    for (std::size_t k = 0; k < lists[i].size(); ++k) {
      const std::string item = path + "[" + std::to_string(k) + "]";
      Color c = static_cast<Color>(as_int(lists[i][k], item, 0, std::numeric_limits<Color>::max()));
      if (set.contains(c)) field_error(item, "duplicate color " + std::to_string(c));
      set.insert(c);
    }
    out.push_back(std::move(set));
  }
  return ListAssignment(std::move(out));
}

PIVector pi_vector_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& counts = require(j, "counts");
  if (!counts.is_array()) field_error("counts", "expected an array");
  PIVector v(n);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const std::string path = "counts[" + std::to_string(k) + "]";
    const Json& entry = counts[k];
    if (!entry.is_object()) field_error(path, "expected an object");
    if (!entry.contains("subset")) field_error(path + ".subset", "missing field");
    if (!entry.contains("size")) field_error(path + ".size", "missing field");
    const Json& subset = entry["subset"];
    if (!subset.is_array() || subset.empty()) field_error(path + ".subset", "expected a nonempty array");
    std::vector<Vertex> members;
    for (std::size_t m = 0; m < subset.size(); ++m) {
      const std::string item = path + ".subset[" + std::to_string(m) + "]";
      Vertex vtx = static_cast<Vertex>(as_int(subset[m], item, 1, n));
      if (!members.empty() && vtx <= members.back()) field_error(item, "subset must be strictly ascending");
      members.push_back(vtx);
    }
    Subset s = Subset::of(members);
    if (seen[s.mask()]) field_error(path + ".subset", "repeated subset " + s.to_string());
    seen[s.mask()] = true;
    v.set(s, as_int(entry["size"], path + ".size", 0, std::numeric_limits<std::int32_t>::max()));
  }
  return v;
}

bool is_pi_vector_record(const Json& j) { return j.is_object() && j.contains("counts"); }

}  // namespace listsep::io
