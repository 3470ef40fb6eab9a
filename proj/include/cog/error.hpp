#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cog {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error { public: using Error::Error; };
class NotSubgroup : public Error { public: using Error::Error; };
class NotWellDefined : public Error { public: using Error::Error; };
class InvalidInput : public Error { public: using Error::Error; };
class PreconditionFailed : public Error { public: using Error::Error; };
class BudgetExceeded : public Error { public: using Error::Error; };
class BasepointConditionFailed : public PreconditionFailed { public: using PreconditionFailed::PreconditionFailed; };
class NotFree : public PreconditionFailed { public: using PreconditionFailed::PreconditionFailed; };
class NotInGH : public PreconditionFailed { public: using PreconditionFailed::PreconditionFailed; };

// A single violated condition plus a human readable witness.
struct Finding {
  std::string kind;
  std::string witness;
};

struct Report {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  void add(std::string kind, std::string witness) {
    findings.push_back({std::move(kind), std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& f : other.findings) findings.push_back({prefix + f.kind, f.witness});
  }
  std::string summary() const {
    std::string s;
    for (const auto& f : findings) s += f.kind + ": " + f.witness + "\n";
    return s;
  }
};

}  // namespace cog
