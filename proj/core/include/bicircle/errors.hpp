#pragma once

#include <stdexcept>
#include <string>

namespace bicircle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical refusals.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NotStrictlyPositive : public Error {
 public:
  using Error::Error;
};

class NonPositiveDensitySample : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Input problems.
class MissingMoment : public Error {
 public:
  MissingMoment(int i, int j)
      : Error("missing moment c(" + std::to_string(i) + "," + std::to_string(j) + ")"),
        i_(i),
        j_(j) {}
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_;
  int j_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace bicircle
