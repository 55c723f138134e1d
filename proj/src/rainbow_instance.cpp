#include "shortcycle/rainbow_instance.hpp"

#include <algorithm>
#include <string>

#include "shortcycle/error.hpp"

namespace shortcycle {

RainbowInstance::RainbowInstance(std::size_t n, std::vector<Family> families,
                                 Origin origin)
    : n_(n), families_(std::move(families)), origin_(origin) {
  for (std::size_t c = 0; c < families_.size(); ++c) {
    const Family& f = families_[c];
    const std::string where = "family " + std::to_string(c);
    if (f.empty()) throw InvalidInput(where + " is empty");
    if (f.size() > 2) throw InvalidInput(where + " has more than 2 edges");
    for (const Edge& e : f) {
      if (e.v >= n) {
        throw InvalidInput(where + " has an endpoint >= " + std::to_string(n));
      }
      if (e.is_loop() && origin_ == Origin::simple) {
        throw InvalidInput(where + " contains a loop at vertex " +
                           std::to_string(e.u));
      }
    }
    if (origin_ == Origin::simple && f.size() == 2 && f[0] == f[1]) {
      throw InvalidInput(where + " repeats an edge");
    }
    if (f.size() == 1) ++singletons_;
  }
}

bool RainbowInstance::family_contains(Color c, const Edge& e) const {
  if (c >= families_.size()) return false;
  const Family& f = families_[c];
  return std::find(f.begin(), f.end(), e) != f.end();
}

}  // namespace shortcycle
