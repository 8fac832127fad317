#include "steinhaus/residue_tuple.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "steinhaus/error.hpp"

namespace steinhaus {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidResidue: return "InvalidResidue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MismatchedSides: return "MismatchedSides";
    case ErrorCode::EmptyTuple: return "EmptyTuple";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::PeriodNotDivisibleBy4: return "PeriodNotDivisibleBy4";
    case ErrorCode::UnbalancedPeriod: return "UnbalancedPeriod";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
  }
  return "Unknown";
}

ResidueTuple::ResidueTuple(std::vector<Residue> entries, int modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
  if (modulus_ < 2 || modulus_ > 255) {
    throw Error(ErrorCode::InvalidArgument, "modulus must lie in [2, 255], got " + std::to_string(modulus_));
  }
  for (Residue e : entries_) {
    if (e < 0 || e >= modulus_) {
      throw Error(ErrorCode::InvalidResidue,
                  "entry " + std::to_string(e) + " outside [0, " + std::to_string(modulus_) + ")");
    }
  }
}

ResidueTuple ResidueTuple::zeros(std::size_t length, int modulus) {
  return ResidueTuple(std::vector<Residue>(length, 0), modulus);
}

ResidueTuple ResidueTuple::parse(std::string_view text, int modulus) {
  std::vector<Residue> entries;
  const bool separated = text.find(',') != std::string_view::npos;
  if (separated) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) throw Error(ErrorCode::InvalidResidue, "empty field in '" + std::string(text) + "'");
      entries.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == ',') {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        token.push_back(c);
      } else {
        throw Error(ErrorCode::InvalidResidue, std::string("unexpected character '") + c + "'");
      }
    }
    flush();
  } else {
    if (modulus > 10) {
      throw Error(ErrorCode::InvalidArgument, "digit strings need modulus <= 10; use commas");
    }
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::InvalidResidue, std::string("unexpected character '") + c + "'");
      }
      entries.push_back(c - '0');
    }
  }
  return ResidueTuple(std::move(entries), modulus);
}

ResidueTuple ResidueTuple::from_bits(std::uint64_t bits, std::size_t length) {
  std::vector<Residue> entries(length);
  for (std::size_t j = 0; j < length; ++j) entries[j] = static_cast<Residue>((bits >> j) & 1U);
  return ResidueTuple(std::move(entries), 2);
}

std::uint64_t ResidueTuple::to_bits() const {
  if (modulus_ != 2 || size() > 64) {
    throw Error(ErrorCode::InvalidArgument, "bit packing needs a binary tuple of length <= 64");
  }
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < size(); ++j) bits |= static_cast<std::uint64_t>(entries_[j]) << j;
  return bits;
}

std::string ResidueTuple::to_string() const {
  std::string out;
  if (modulus_ <= 10) {
    out.reserve(size());
    for (Residue e : entries_) out.push_back(static_cast<char>('0' + e));
    return out;
  }
  for (std::size_t j = 0; j < size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(entries_[j]);
  }
  return out;
}

ResidueTuple ResidueTuple::repeat(std::size_t count) const {
  std::vector<Residue> out;
  out.reserve(size() * count);
  for (std::size_t k = 0; k < count; ++k) out.insert(out.end(), entries_.begin(), entries_.end());
  return ResidueTuple(std::move(out), modulus_);
}

ResidueTuple ResidueTuple::reversed() const {
  std::vector<Residue> out(entries_.rbegin(), entries_.rend());
  return ResidueTuple(std::move(out), modulus_);
}

}  // namespace steinhaus
