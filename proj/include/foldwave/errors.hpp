#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foldwave {

// The numeric value of each category is the CLI exit code.
enum class ErrorCategory : int {
  Input = 2,
  Kinematic = 3,
  Design = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define FOLDWAVE_DEFINE_ERROR(Name, Category)                               \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(Category, what) {}       \
  };

// Kinematics
FOLDWAVE_DEFINE_ERROR(SingularVertex, ErrorCategory::Kinematic)
FOLDWAVE_DEFINE_ERROR(DomainError, ErrorCategory::Kinematic)
FOLDWAVE_DEFINE_ERROR(DegenerateMap, ErrorCategory::Kinematic)
FOLDWAVE_DEFINE_ERROR(UniformMap, ErrorCategory::Kinematic)
FOLDWAVE_DEFINE_ERROR(NotPlanar, ErrorCategory::Kinematic)

// Input validation
FOLDWAVE_DEFINE_ERROR(InvalidDesign, ErrorCategory::Input)
FOLDWAVE_DEFINE_ERROR(NotPeriodic, ErrorCategory::Input)
FOLDWAVE_DEFINE_ERROR(NonUniformPolyline, ErrorCategory::Input)
FOLDWAVE_DEFINE_ERROR(WrongConnectivity, ErrorCategory::Input)
FOLDWAVE_DEFINE_ERROR(ParseError, ErrorCategory::Input)

// Inverse design
FOLDWAVE_DEFINE_ERROR(NoSolution, ErrorCategory::Design)
FOLDWAVE_DEFINE_ERROR(SingularResult, ErrorCategory::Design)

#undef FOLDWAVE_DEFINE_ERROR

/// A polyline cell whose four-center chain cannot be built.
class GeometryInfeasible : public Error {
 public:
  GeometryInfeasible(std::size_t cell, const std::string& what)
      : Error(ErrorCategory::Design,
              "cell " + std::to_string(cell) + ": " + what),
        cell_(cell) {}
  std::size_t cell() const noexcept { return cell_; }

 private:
  std::size_t cell_;
};

}  // namespace foldwave
