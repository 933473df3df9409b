#include "seifert/applications/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seifert/descriptor.hpp"
#include "seifert/json_util.hpp"

namespace seifert {
namespace {

struct FamilyShape {
  std::string label;
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> numerators;
};

std::vector<std::int64_t> units(std::int64_t order) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < order; ++a) {
    if (std::gcd(a, order) == 1) out.push_back(a);
  }
  return out;
}

TableRow sweep(const FamilyShape& shape) {
  TableRow row;
  row.family = shape.label;
  const std::size_t n = shape.orders.size();
  std::vector<std::size_t> pick(n, 0);
  bool first = true;
  for (;;) {
    std::vector<ConePair> cones;
    for (std::size_t i = 0; i < n; ++i) {
      cones.push_back({Integer(shape.numerators[i][pick[i]]), Integer(shape.orders[i])});
    }
    for (std::int64_t b = kTableBMin; b <= kTableBMax; ++b) {
      CensusRecord r = make_record(SeifertInvariants(0, Integer(b), cones));
      const Integer order = (Rational(cone_order_product(r.invariants)) * abs(r.euler_number)).num();
      if (first || order < row.min_order) row.min_order = order;
      first = false;
      row.chi = r.chi;
      if (r.vanishing.vanishes) row.vanishing.push_back(r.invariants);
      row.sweep.push_back(std::move(r));
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == shape.numerators[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  std::sort(row.vanishing.begin(), row.vanishing.end(),
            [](const SeifertInvariants& x, const SeifertInvariants& y) {
              if (x.b() != y.b()) return x.b() < y.b();
              return x.cones() < y.cones();
            });
  return row;
}

FamilyShape fixed(std::string label, std::vector<std::int64_t> orders) {
  std::vector<std::vector<std::int64_t>> nums(orders.size(), {1});
  return {std::move(label), std::move(orders), std::move(nums)};
}

std::string joined_vanishing(const TableRow& row) {
  std::string out;
  for (const auto& v : row.vanishing) {
    if (!out.empty()) out += ' ';
    out += format_compact(v);
  }
  return out;
}

std::string joined_h1(const TableRow& row) {
  std::string out;
  for (const auto& v : row.vanishing) {
    if (!out.empty()) out += "; ";
    out += first_homology(v).str();
  }
  return out;
}

}  // namespace

SeifertTable spherical_table() {
  SeifertTable t{"spherical", {}};
  t.rows.push_back(sweep(fixed("(b, 1/2, 1/2, 1/2)", {2, 2, 2})));
  for (std::int64_t k = 3; k <= 12; ++k) {
    t.rows.push_back(sweep({"(b, 1/2, 1/2, a/" + std::to_string(k) + ")",
                            {2, 2, k},
                            {{1}, {1}, units(k)}}));
  }
  for (std::int64_t k = 3; k <= 5; ++k) {
    t.rows.push_back(sweep({"(b, 1/2, 1/3, a/" + std::to_string(k) + ")",
                            {2, 3, k},
                            {{1}, {1}, units(k)}}));
  }
  return t;
}

SeifertTable euclidean_table() {
  SeifertTable t{"euclidean", {}};
  t.rows.push_back(sweep(fixed("(b, 1/2, 1/3, 1/6)", {2, 3, 6})));
  t.rows.push_back(sweep(fixed("(b, 1/2, 1/4, 1/4)", {2, 4, 4})));
  t.rows.push_back(sweep(fixed("(b, 1/3, 1/3, 1/3)", {3, 3, 3})));
  t.rows.push_back(sweep(fixed("(b, 1/2, 1/2, 1/2, 1/2)", {2, 2, 2, 2})));
  return t;
}

std::string render_tables(std::span<const SeifertTable> tables, TableFormat format) {
  const std::vector<std::string> header{"table", "family",    "chi",      "tuples",
                                        "vanishing", "h1", "min_order"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& t : tables) {
    for (const auto& r : t.rows) {
      cells.push_back({t.name, r.family, r.chi.str(), std::to_string(r.sweep.size()),
                       joined_vanishing(r), joined_h1(r), r.min_order.str()});
    }
  }
  std::ostringstream os;
  switch (format) {
    case TableFormat::Csv: {
      for (std::size_t c = 0; c < header.size(); ++c) {
        os << (c ? "," : "") << header[c];
      }
      os << '\n';
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << (c ? "," : "") << csv_field(row[c]);
        }
        os << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& t : tables) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : t.rows) {
          nlohmann::ordered_json vanishing = nlohmann::ordered_json::array();
          for (const auto& v : r.vanishing) {
            vanishing.push_back({{"descriptor", descriptor_json(v)},
                                 {"h1", homology_json(first_homology(v))}});
          }
          nlohmann::ordered_json row;
          row["family"] = r.family;
          row["chi"] = rational_json(r.chi);
          row["tuples"] = r.sweep.size();
          row["vanishing"] = std::move(vanishing);
          row["min_order"] = integer_json(r.min_order);
          rows.push_back(std::move(row));
        }
        out.push_back({{"table", t.name}, {"rows", std::move(rows)}});
      }
      os << out.dump(2) << '\n';
      break;
    }
    case TableFormat::Text: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size(); ++c) {
          s += row[c];
          if (c + 1 < row.size()) s += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << s << '\n';
      };
      line(header);
      for (const auto& row : cells) line(row);
      break;
    }
  }
  return os.str();
}

}  // namespace seifert
