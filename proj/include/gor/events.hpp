#ifndef GOR_EVENTS_HPP
#define GOR_EVENTS_HPP

#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "gor/model.hpp"

namespace gor {

// Builds the event with the given number. The number and the bit pattern are
// a bijection for fixed n_vars: bit i-1 of the pattern (state of x_i) is bit
// (n_vars - i) of the number.
Event event_from_number(int n_vars, std::uint64_t number);

// Inverse direction of the bijection: bits must all be 0 or 1.
Event event_from_bits(const std::vector<std::uint8_t>& bits);

// All 2^n_vars events in increasing number order. Refuses n_vars above the
// cap; use stream_events for larger N.
std::vector<Event> enumerate_events(int n_vars,
                                    int cap = kDefaultMaterializationCap);

// The distinguished endpoints of the event range: number 0 and 2^n_vars - 1.
Event all_zeros(int n_vars);
Event all_ones(int n_vars);

// Maps a target event onto the subset of variables that are in state 1
// (componentwise product with {x_1..x_N}, zeros dropped). The empty subset
// comes back only for the all-zeros event; the subset number always equals
// the event number.
SubsetSpec subset_from_event(const Event& target);

// Builds a subset from 1-based member indices. Accepts members in any order,
// rejects duplicates and out-of-range indices.
SubsetSpec subset_from_members(int n_vars, std::vector<int> members);

// The event whose state-1 variables are exactly the subset's members.
Event indicator_event(const SubsetSpec& subset);

// The event that singles out one variable: number 2^(n_vars - var_index),
// with exactly one bit set at x_var_index.
Event event_for_single_variable(int n_vars, int var_index);

// All (reference, target) pairs whose transition flips exactly the subset's
// members from 0 to 1 while every other variable keeps its state. Ordered by
// increasing reference number, so the all-zeros reference comes first; the
// count is 2^(N - |subset|). The cap bounds that count.
std::vector<std::pair<Event, Event>> reference_target_pairs(
    const SubsetSpec& subset, int cap = kDefaultMaterializationCap);

// Lazy number-order enumeration with no materialization cap.
class EventRange {
public:
  class iterator {
  public:
    using value_type = Event;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n_vars, std::uint64_t number)
        : n_vars_(n_vars), number_(number) {}

    Event operator*() const { return event_from_number(n_vars_, number_); }
    iterator& operator++() {
      ++number_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++number_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

  private:
    int n_vars_ = 0;
    std::uint64_t number_ = 0;
  };

  explicit EventRange(int n_vars);

  iterator begin() const { return {n_vars_, 0}; }
  iterator end() const { return {n_vars_, count_}; }
  std::uint64_t size() const { return count_; }

private:
  int n_vars_;
  std::uint64_t count_;
};

EventRange stream_events(int n_vars);

}  // namespace gor

#endif  // GOR_EVENTS_HPP
