#pragma once

#include <stdexcept>
#include <string>

namespace heegaard {

// Exit codes used by the command line tool.  Library code throws; the CLI
// maps each error kind to the matching process exit code.
enum class errc : int {
  domain = 1,  // invalid input or an operation outside its domain
  guard = 2,   // an expansion or trace would exceed the size guard
  io = 3,      // file or stream failure
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

inline void require(bool cond, errc kind, const std::string& what) {
  if (!cond) throw error(kind, what);
}

}  // namespace heegaard
