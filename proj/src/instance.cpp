#include "uflp/instance.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace uflp {

void Instance::validate() const {
  if (num_facilities < 1 || num_customers < 1) {
    throw std::invalid_argument("instance: need at least one facility and one customer");
  }
  if (opening_cost.size() != static_cast<std::size_t>(num_facilities) ||
      service_cost.size() !=
          static_cast<std::size_t>(num_facilities) * num_customers) {
    throw std::invalid_argument("instance: cost array sizes do not match n, m");
  }
  for (Cost f : opening_cost) {
    if (f < 0) throw std::invalid_argument("instance: opening cost < 0");
  }
  for (Cost c : service_cost) {
    if (c < 1) throw std::invalid_argument("instance: service cost < 1");
  }
}

Instance generate(const ModelId& model, int num_facilities, int num_customers,
                  std::uint64_t seed) {
  if (num_facilities < 1 || num_customers < 1) {
    throw std::invalid_argument("generate: need at least one facility and one customer");
  }
  if (model.number < 1 || model.number > 4) {
    throw std::invalid_argument("generate: model number must be 1..4");
  }

  Instance inst;
  inst.num_facilities = num_facilities;
  inst.num_customers = num_customers;
  inst.opening_cost.resize(num_facilities);
  inst.service_cost.resize(static_cast<std::size_t>(num_facilities) *
                           num_customers);

  Rng64 rng(seed);

  // Opening costs first, ascending facility index.
  switch (model.number) {
    case 1:
    case 4:
      for (auto& f : inst.opening_cost) f = 1;
      break;
    case 2:
    case 3:
      for (auto& f : inst.opening_cost) f = rng.uniform_int(1, 2);
      break;
  }

  // Then the matrix, row-major.
  switch (model.number) {
    case 1:
      for (auto& c : inst.service_cost) c = rng.uniform_int(1, 10);
      break;
    case 2:
      // Uniform 1..10 with every value above 1 overwritten by the maximum,
      // i.e. distance 1 with probability 0.1 and 10 otherwise.
      for (auto& c : inst.service_cost) {
        c = rng.uniform_int(1, 10) == 1 ? 1 : 10;
      }
      break;
    case 3:
      for (auto& c : inst.service_cost) c = rng.uniform_int(1, 2);
      break;
    case 4: {
      // 1 + number of successes over `trials` Bernoulli trials. A trial
      // succeeds when a draw from {0 .. lambda_den*trials - 1} falls below
      // lambda_num, which makes the per-trial probability exactly
      // lambda_num / (lambda_den * trials) in integer arithmetic.
      if (model.trials < 1 || model.lambda_num < 0 || model.lambda_den < 1) {
        throw std::invalid_argument("generate: bad model 4 parameters");
      }
      const std::int64_t range_top =
          static_cast<std::int64_t>(model.lambda_den) * model.trials - 1;
      for (auto& c : inst.service_cost) {
        Cost successes = 0;
        for (int t = 0; t < model.trials; ++t) {
          if (rng.uniform_int(0, range_top) < model.lambda_num) ++successes;
        }
        c = 1 + successes;
      }
      break;
    }
  }
  return inst;
}

void write_instance(const Instance& instance, std::ostream& out) {
  out << instance.num_facilities << ' ' << instance.num_customers << '\n';
  for (int i = 0; i < instance.num_facilities; ++i) {
    if (i > 0) out << ' ';
    out << instance.opening_cost[i];
  }
  out << '\n';
  for (int i = 0; i < instance.num_facilities; ++i) {
    const auto row = instance.service_row(i);
    for (int j = 0; j < instance.num_customers; ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  write_instance(instance, out);
  return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

std::int64_t parse_int(const std::string& token, const char* where) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseError::Kind::Token,
                     std::string("not an integer in ") + where + ": '" + token + "'");
  }
  return value;
}

// Next line with content, with trailing '\r' stripped. Comment lines are
// consumed only while `comments_allowed` stays true.
bool next_data_line(std::istream& in, std::string& line, bool comments_allowed) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) continue;
    if (comments_allowed && line[0] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line, /*comments_allowed=*/true)) {
    throw ParseError(ParseError::Kind::Header, "missing header line");
  }
  auto header = tokenize(line);
  if (header.size() != 2) {
    throw ParseError(ParseError::Kind::Header,
                     "header must be 'n m', got '" + line + "'");
  }
  const std::int64_t n = parse_int(header[0], "header");
  const std::int64_t m = parse_int(header[1], "header");
  if (n < 1 || m < 1) {
    throw ParseError(ParseError::Kind::Invariant,
                     "header: counts must be at least 1");
  }
  if (n > 1'000'000 || m > 10'000'000 || n * m > 200'000'000) {
    throw ParseError(ParseError::Kind::Invariant, "header: instance too large");
  }

  Instance inst;
  inst.num_facilities = static_cast<int>(n);
  inst.num_customers = static_cast<int>(m);
  inst.opening_cost.reserve(n);
  inst.service_cost.reserve(static_cast<std::size_t>(n) * m);

  if (!next_data_line(in, line, false)) {
    throw ParseError(ParseError::Kind::RowLength, "missing opening-cost line");
  }
  auto costs = tokenize(line);
  if (costs.size() != static_cast<std::size_t>(n)) {
    throw ParseError(ParseError::Kind::RowLength,
                     "opening-cost line holds " + std::to_string(costs.size()) +
                         " values, expected " + std::to_string(n));
  }
  for (const auto& token : costs) {
    const Cost f = parse_int(token, "opening costs");
    if (f < 0) {
      throw ParseError(ParseError::Kind::Invariant,
                       "opening cost < 0: " + token);
    }
    inst.opening_cost.push_back(f);
  }

  for (std::int64_t i = 0; i < n; ++i) {
    if (!next_data_line(in, line, false)) {
      throw ParseError(ParseError::Kind::RowLength,
                       "missing service-cost row " + std::to_string(i + 1));
    }
    auto row = tokenize(line);
    if (row.size() != static_cast<std::size_t>(m)) {
      throw ParseError(ParseError::Kind::RowLength,
                       "service-cost row " + std::to_string(i + 1) + " holds " +
                           std::to_string(row.size()) + " values, expected " +
                           std::to_string(m));
    }
    for (const auto& token : row) {
      const Cost c = parse_int(token, "service costs");
      if (c < 1) {
        throw ParseError(ParseError::Kind::Invariant,
                         "service cost < 1: " + token);
      }
      inst.service_cost.push_back(c);
    }
  }

  if (next_data_line(in, line, false)) {
    throw ParseError(ParseError::Kind::Token,
                     "unexpected content after last row: '" + line + "'");
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace uflp
