#include "fmm/bounds.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "fmm/errors.hpp"

namespace fmm {

namespace {

long long naive_count(const std::array<int, 3>& key) {
  return static_cast<long long>(key[0]) * key[1] * key[2];
}

void check_dims(const Dims& dims) {
  if (dims.u < 1 || dims.v < 1 || dims.w < 1) {
    throw ParameterError("bound dims must be positive, got " + dims.str());
  }
}

}  // namespace

BoundsTable BoundsTable::seeded() {
  BoundsTable t;
  t.add({1, 2, 2}, 4, "naive");
  t.add({2, 2, 2}, 7, "Strassen 1969");
  t.add({3, 3, 3}, 23, "cited");
  t.add({3, 3, 4}, 29, "Smirnov 2013");
  t.add({3, 4, 4}, 38, "Smirnov 2013");
  t.add({3, 3, 6}, 40, "Smirnov 2013");
  t.add({4, 4, 4}, 49, "kronecker 7·7");
  t.add({6, 6, 3}, 80, "kronecker 40·2");
  t.add({6, 6, 6}, 160, "kronecker 40·4");
  t.add({7, 7, 7}, 250, "divide-and-conquer 49+3·38+3·29");
  t.add({9, 9, 9}, 520, "divide-and-conquer 160+3·80+3·40");
  t.add({9, 9, 9}, 514, "cited");
  return t;
}

void BoundsTable::add(const Dims& dims, long long rank_bound, std::string provenance) {
  check_dims(dims);
  const auto key = dims.sorted_key();
  if (rank_bound < 1) {
    throw ParameterError("rank bound must be positive, got " + std::to_string(rank_bound));
  }
  if (rank_bound > naive_count(key)) {
    throw ValidationError("bound " + std::to_string(rank_bound) + " for " + dims.str() +
                          " exceeds the trivial count " + std::to_string(naive_count(key)));
  }
  by_key_[key].push_back(BoundEntry{key, rank_bound, std::move(provenance)});
}

long long BoundsTable::query(const Dims& dims) const { return best_entry(dims).rank_bound; }

BoundEntry BoundsTable::best_entry(const Dims& dims) const {
  check_dims(dims);
  const auto key = dims.sorted_key();
  const BoundEntry* best = nullptr;
  if (auto it = by_key_.find(key); it != by_key_.end()) {
    for (const BoundEntry& e : it->second) {
      if (!best || e.rank_bound < best->rank_bound) best = &e;
    }
  }
  if (best) return *best;
  return BoundEntry{key, naive_count(key), "naive"};
}

void BoundsTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!root.is_object() || !root.contains("bounds") || !root["bounds"].is_array()) {
    throw ValidationError(path + ": expected an object with a \"bounds\" array");
  }
  for (const auto& rec : root["bounds"]) {
    for (const char* field : {"u", "v", "w", "bound"}) {
      if (!rec.contains(field) || !rec[field].is_number_integer()) {
        throw ValidationError(path + ": each record needs integer u, v, w, bound");
      }
    }
    add({rec["u"].get<int>(), rec["v"].get<int>(), rec["w"].get<int>()},
        rec["bound"].get<long long>(), rec.value("provenance", std::string{}));
  }
}

std::vector<BoundEntry> BoundsTable::entries() const {
  std::vector<BoundEntry> out;
  for (const auto& [key, list] : by_key_) {
    (void)key;
    out.insert(out.end(), list.begin(), list.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const BoundEntry& a, const BoundEntry& b) {
    return a.dims_key != b.dims_key ? a.dims_key < b.dims_key : a.rank_bound < b.rank_bound;
  });
  return out;
}

long long prop1_bound(int u, int v, const BoundsTable& table) {
  if (v < 1 || u <= v) {
    throw ParameterError("divide-and-conquer bound needs u > v >= 1, got u=" +
                         std::to_string(u) + ", v=" + std::to_string(v));
  }
  return table.query({u, u, u}) + 3 * table.query({u, u, v}) + 3 * table.query({v, v, u});
}

std::string prop1_derivation(int u, int v, const BoundsTable& table) {
  const long long a = table.query({u, u, u});
  const long long b = table.query({u, u, v});
  const long long c = table.query({v, v, u});
  const long long total = prop1_bound(u, v, table);
  return std::to_string(total) + " = " + std::to_string(a) + "+3·" + std::to_string(b) + "+3·" +
         std::to_string(c);
}

long long kron_bound(const Dims& d1, const Dims& d2, const BoundsTable& table) {
  return table.query(d1) * table.query(d2);
}

std::string kron_derivation(const Dims& d1, const Dims& d2, const BoundsTable& table) {
  const long long a = table.query(d1);
  const long long b = table.query(d2);
  return std::to_string(a * b) + " = " + std::to_string(a) + "·" + std::to_string(b);
}

}  // namespace fmm
