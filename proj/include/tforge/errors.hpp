#ifndef TFORGE_ERRORS_HPP
#define TFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tforge
{

  /// Malformed or inconsistent input (wrong shapes, unknown names, bad JSON).
  class InputError : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// A mathematical precondition failed; `witness()` names the offending object.
  class Rejection : public std::runtime_error
  {
  public:
    Rejection(const std::string &what, std::string witness)
        : std::runtime_error(what), m_witness(std::move(witness))
    {
    }
    explicit Rejection(const std::string &what) : std::runtime_error(what) {}

    const std::string &witness() const { return m_witness; }

  private:
    std::string m_witness;
  };

} // namespace tforge

#endif
