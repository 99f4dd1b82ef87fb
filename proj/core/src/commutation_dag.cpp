#include "paulinet/commutation_dag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace paulinet {

const char* to_string(OrderingMode mode) {
  return mode == OrderingMode::Preserving ? "preserve" : "modify";
}

OrderingMode ordering_mode_from_string(std::string_view name) {
  if (name == "preserve") return OrderingMode::Preserving;
  if (name == "modify") return OrderingMode::Modifying;
  throw std::invalid_argument("unknown ordering mode '" + std::string(name) +
                              "' (expected preserve or modify)");
}

CommutationDag CommutationDag::build(const PauliWord& word) {
  // Node ids are orig_index values, which need not be dense.
  std::uint32_t max_id = 0;
  for (const auto& r : word.rows()) max_id = std::max(max_id, r.orig_index);
  const std::size_t slots = word.empty() ? 0 : max_id + 1;

  CommutationDag dag;
  auto succ = std::make_shared<std::vector<std::vector<std::uint32_t>>>(slots);
  dag.active_.assign(slots, false);
  dag.indegree_.assign(slots, 0);
  dag.active_count_ = word.size();
  for (const auto& r : word.rows()) {
    if (dag.active_[r.orig_index]) {
      throw std::invalid_argument("duplicate orig_index " + std::to_string(r.orig_index));
    }
    dag.active_[r.orig_index] = true;
  }
  // Edges run from the row earlier in the original sequence to the later one.
  const std::size_t k = word.size();
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) {
      if (!word.row(u).pauli.commutes_with(word.row(v).pauli)) {
        std::uint32_t uid = word.row(u).orig_index;
        std::uint32_t vid = word.row(v).orig_index;
        if (uid > vid) std::swap(uid, vid);
        (*succ)[uid].push_back(vid);
        ++dag.indegree_[vid];
      }
    }
  }
  dag.successors_ = std::move(succ);
  return dag;
}

bool CommutationDag::is_active(std::uint32_t id) const {
  return id < active_.size() && active_[id];
}

bool CommutationDag::is_front(std::uint32_t id) const {
  return is_active(id) && indegree_[id] == 0;
}

std::vector<std::uint32_t> CommutationDag::front_layer() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = 0; id < active_.size(); ++id) {
    if (active_[id] && indegree_[id] == 0) out.push_back(id);
  }
  return out;
}

std::vector<std::uint32_t> CommutationDag::available_actions(OrderingMode mode) const {
  if (mode == OrderingMode::Preserving) return front_layer();
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = 0; id < active_.size(); ++id) {
    if (active_[id]) out.push_back(id);
  }
  return out;
}

void CommutationDag::remove(std::uint32_t id, OrderingMode mode) {
  if (!is_active(id)) {
    throw std::logic_error("removing inactive DAG node " + std::to_string(id));
  }
  if (mode == OrderingMode::Preserving && indegree_[id] != 0) {
    throw std::logic_error("removing non-front-layer node " + std::to_string(id) +
                           " in preserving mode");
  }
  active_[id] = false;
  --active_count_;
  for (std::uint32_t succ : (*successors_)[id]) {
    if (active_[succ]) --indegree_[succ];
  }
}

void CommutationDag::remove_rows(std::span<const std::uint32_t> ids, OrderingMode mode) {
  if (mode == OrderingMode::Modifying) {
    for (std::uint32_t id : ids) remove(id, mode);
    return;
  }
  std::vector<std::uint32_t> pending(ids.begin(), ids.end());
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      if (is_front(*it)) {
        remove(*it, mode);
        it = pending.erase(it);
        progressed = true;
      } else {
        ++it;
      }
    }
    if (!progressed) {
      throw std::logic_error("removing non-front-layer node " +
                             std::to_string(pending.front()) + " in preserving mode");
    }
  }
}

bool CommutationDag::has_edge(std::uint32_t from, std::uint32_t to) const {
  if (from >= successors_->size()) return false;
  const auto& succ = (*successors_)[from];
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

std::uint32_t CommutationDag::indegree(std::uint32_t id) const {
  if (!is_active(id)) {
    throw std::out_of_range("indegree of inactive node " + std::to_string(id));
  }
  return indegree_[id];
}

std::uint64_t CommutationDag::active_fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t id = 0; id < active_.size(); ++id) {
    if (active_[id]) {
      h ^= id + 1;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

}  // namespace paulinet
