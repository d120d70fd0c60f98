#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nctd {

using Vertex = int;

// A subset of the vertex range [0, universe). All binary operations require
// both operands to share the same universe.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const Bits* bits, Bits::size_type pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    Iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }
    bool operator!=(const Iterator& other) const { return pos_ != other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    Bits::size_type pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : bits_(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<Vertex>& members)
      : bits_(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() &&
           bits_.test(static_cast<std::size_t>(v));
  }
  void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
  void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }
  void clear() { bits_.reset(); }

  // Smallest member, or -1 when empty.
  Vertex first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? -1 : static_cast<Vertex>(p);
  }

  bool is_subset_of(const VertexSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const VertexSet& other) const {
    return bits_.intersects(other.bits_);
  }

  VertexSet& operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

  // Orders sets by their sorted member lists, so {0,5} < {1}.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin(), j = b.begin();
    for (; i != a.end() && j != b.end(); ++i, ++j) {
      if (*i != *j) return *i < *j;
    }
    return i == a.end() && j != b.end();
  }

  Iterator begin() const { return Iterator(&bits_, bits_.find_first()); }
  Iterator end() const { return Iterator(&bits_, Bits::npos); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  // Copy into a different universe size; members beyond it are dropped.
  VertexSet resized(std::size_t universe) const {
    VertexSet s = *this;
    s.bits_.resize(universe);
    return s;
  }

  const Bits& bits() const { return bits_; }

  // "{0,3,4}" with 0-based ids; used in diagnostics.
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

 private:
  Bits bits_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    return boost::hash_value(s.bits());
  }
};

}  // namespace nctd
