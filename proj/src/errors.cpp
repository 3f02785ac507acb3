#include "swalk/errors.hpp"

#include <atomic>

namespace swalk {

namespace {
std::atomic<std::size_t> g_budget{std::size_t{4} << 30};
}

std::size_t memory_budget() { return g_budget.load(std::memory_order_relaxed); }
void set_memory_budget(std::size_t bytes) { g_budget.store(bytes, std::memory_order_relaxed); }

void require_budget(std::size_t bytes, const char* what) {
  if (bytes > memory_budget()) {
    throw ResourceLimitError(std::string(what) + " needs " + std::to_string(bytes) + " bytes, budget is " +
                             std::to_string(memory_budget()));
  }
}

}  // namespace swalk
