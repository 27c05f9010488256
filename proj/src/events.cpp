#include "gor/events.hpp"

#include <algorithm>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

namespace {

std::uint64_t max_number(int n_vars) {
  return (std::uint64_t{1} << n_vars) - 1;
}

// Bit position of x_i inside the event number (x_1 is the most significant).
int bit_shift(int n_vars, int var_index) { return n_vars - var_index; }

}  // namespace

Event event_from_number(int n_vars, std::uint64_t number) {
  check_n_vars(n_vars);
  if (number > max_number(n_vars)) {
    std::ostringstream msg;
    msg << "event number " << number << " out of range 0.."
        << max_number(n_vars) << " for n_vars=" << n_vars;
    throw DomainError(msg.str());
  }
  Event event;
  event.n_vars = n_vars;
  event.number = number;
  event.bits.resize(static_cast<std::size_t>(n_vars));
  for (int i = 1; i <= n_vars; ++i) {
    event.bits[static_cast<std::size_t>(i - 1)] =
        static_cast<std::uint8_t>((number >> bit_shift(n_vars, i)) & 1u);
  }
  return event;
}

Event event_from_bits(const std::vector<std::uint8_t>& bits) {
  const int n_vars = static_cast<int>(bits.size());
  check_n_vars(n_vars);
  std::uint64_t number = 0;
  for (int i = 1; i <= n_vars; ++i) {
    const std::uint8_t b = bits[static_cast<std::size_t>(i - 1)];
    if (b > 1) {
      std::ostringstream msg;
      msg << "bit for x" << i << " is " << static_cast<int>(b)
          << "; states must be 0 or 1";
      throw DomainError(msg.str());
    }
    number |= static_cast<std::uint64_t>(b) << bit_shift(n_vars, i);
  }
  Event event;
  event.n_vars = n_vars;
  event.bits = bits;
  event.number = number;
  return event;
}

std::vector<Event> enumerate_events(int n_vars, int cap) {
  if (n_vars > cap) {
    std::ostringstream msg;
    msg << "enumerating 2^" << n_vars
        << " events exceeds the materialization cap of " << cap
        << "; use stream_events for lazy enumeration";
    throw CapacityError(msg.str());
  }
  check_n_vars(n_vars);
  std::vector<Event> events;
  events.reserve(std::size_t{1} << n_vars);
  for (std::uint64_t nu = 0; nu <= max_number(n_vars); ++nu) {
    events.push_back(event_from_number(n_vars, nu));
  }
  return events;
}

Event all_zeros(int n_vars) { return event_from_number(n_vars, 0); }

Event all_ones(int n_vars) {
  check_n_vars(n_vars);
  return event_from_number(n_vars, max_number(n_vars));
}

SubsetSpec subset_from_event(const Event& target) {
  check_n_vars(target.n_vars);
  SubsetSpec subset;
  subset.n_vars = target.n_vars;
  subset.number = target.number;
  for (int i = 1; i <= target.n_vars; ++i) {
    if (target.bits[static_cast<std::size_t>(i - 1)] != 0) {
      subset.members.push_back(i);
    }
  }
  return subset;
}

SubsetSpec subset_from_members(int n_vars, std::vector<int> members) {
  check_n_vars(n_vars);
  std::sort(members.begin(), members.end());
  SubsetSpec subset;
  subset.n_vars = n_vars;
  int prev = 0;
  for (int m : members) {
    if (m < 1 || m > n_vars) {
      std::ostringstream msg;
      msg << "variable index " << m << " out of range 1.." << n_vars;
      throw DomainError(msg.str());
    }
    if (m == prev) {
      std::ostringstream msg;
      msg << "duplicate variable index x" << m << " in subset";
      throw DomainError(msg.str());
    }
    prev = m;
    subset.number |= std::uint64_t{1} << bit_shift(n_vars, m);
  }
  subset.members = std::move(members);
  return subset;
}

Event indicator_event(const SubsetSpec& subset) {
  check_subset(subset);
  return event_from_number(subset.n_vars, subset.number);
}

Event event_for_single_variable(int n_vars, int var_index) {
  check_n_vars(n_vars);
  if (var_index < 1 || var_index > n_vars) {
    std::ostringstream msg;
    msg << "variable index " << var_index << " out of range 1.." << n_vars;
    throw DomainError(msg.str());
  }
  return event_from_number(n_vars,
                           std::uint64_t{1} << bit_shift(n_vars, var_index));
}

std::vector<std::pair<Event, Event>> reference_target_pairs(
    const SubsetSpec& subset, int cap) {
  check_subset(subset);
  if (subset.empty()) {
    throw DomainError("reference/target pairs need a non-empty subset");
  }

  // Non-member bit positions, most significant first. Scattering a counter's
  // bits over them in that order walks the references in increasing order.
  std::vector<int> free_shifts;
  for (int i = 1; i <= subset.n_vars; ++i) {
    if ((subset.number >> bit_shift(subset.n_vars, i) & 1u) == 0) {
      free_shifts.push_back(bit_shift(subset.n_vars, i));
    }
  }
  const int n_free = static_cast<int>(free_shifts.size());
  if (n_free > cap) {
    std::ostringstream msg;
    msg << "subset of " << subset.size() << " of " << subset.n_vars
        << " variables has 2^" << n_free
        << " reference/target pairs, past the materialization cap of " << cap;
    throw CapacityError(msg.str());
  }

  std::vector<std::pair<Event, Event>> pairs;
  pairs.reserve(std::size_t{1} << n_free);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n_free); ++k) {
    std::uint64_t reference = 0;
    for (int j = 0; j < n_free; ++j) {
      if ((k >> (n_free - 1 - j)) & 1u) {
        reference |= std::uint64_t{1} << free_shifts[static_cast<std::size_t>(j)];
      }
    }
    pairs.emplace_back(event_from_number(subset.n_vars, reference),
                       event_from_number(subset.n_vars, reference | subset.number));
  }
  return pairs;
}

EventRange::EventRange(int n_vars) : n_vars_(n_vars) {
  check_n_vars(n_vars);
  count_ = std::uint64_t{1} << n_vars;
}

EventRange stream_events(int n_vars) { return EventRange(n_vars); }

}  // namespace gor
