#include "mcent/table_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace mcent {

using ordered_json = nlohmann::ordered_json;

std::string table_to_json(const CoefficientTable& table)
{
  auto entries = table.entries;
  sort_entries(entries);

  ordered_json doc;
  doc["meta"]["m"] = table.m;
  doc["meta"]["max_size"] = table.max_size;
  doc["meta"]["format"] = 1;
  doc["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json item;
    item["lambda"] = e.lambda.str();
    item["delta"] = e.delta.str();
    item["rho"] = e.rho.str();
    item["k"] = e.k.str();
    doc["entries"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

CoefficientTable table_from_json(const std::string& text)
{
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    const auto& meta = doc.at("meta");
    if (meta.at("format").get<int>() != 1)
      throw std::invalid_argument("unsupported table format");

    CoefficientTable table;
    table.m = meta.at("m").get<int>();
    table.max_size = meta.at("max_size").get<int>();
    for (const auto& item : doc.at("entries")) {
      TableEntry e{parse_shape(item.at("lambda").get<std::string>(), table.m),
                   parse_shape(item.at("delta").get<std::string>(), table.m),
                   parse_shape(item.at("rho").get<std::string>(), table.m),
                   parse_decimal(item.at("k").get<std::string>())};
      if (e.k == 0)
        throw std::invalid_argument("table stores a zero coefficient");
      if (e.rho.size() > e.lambda.size() + e.delta.size())
        throw std::invalid_argument("table entry violates |rho| <= |lambda| + |delta|");
      table.entries.push_back(std::move(e));
    }
    sort_entries(table.entries);
    return table;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + ex.what());
  }
}

std::string table_to_csv(const CoefficientTable& table)
{
  auto entries = table.entries;
  sort_entries(entries);
  std::string out = "lambda,delta,rho,k\n";
  for (const auto& e : entries)
    out += "\"" + e.lambda.str() + "\",\"" + e.delta.str() + "\",\"" + e.rho.str() + "\"," +
           e.k.str() + "\n";
  return out;
}

std::string poly_to_json(const BinomialPoly& poly)
{
  ordered_json doc;
  doc["offset"] = poly.offset();
  doc["coeffs"] = ordered_json::object();
  for (const auto& [k, c] : poly.coeffs())
    doc["coeffs"][std::to_string(k)] = c.str();
  return doc.dump();
}

BinomialPoly poly_from_json(const std::string& text)
{
  try {
    auto doc = ordered_json::parse(text);
    BinomialPoly::Coeffs coeffs;
    for (const auto& [key, value] : doc.at("coeffs").items())
      coeffs[std::stoi(key)] = parse_decimal(value.get<std::string>());
    return BinomialPoly(doc.at("offset").get<int>(), std::move(coeffs));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

} // namespace mcent
