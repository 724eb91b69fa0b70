/**
 * @file json_io.cpp
 * @brief Implementation of the deterministic JSON emitter.
 */
#include "cskit/json_io.hpp"

#include <cstdio>

namespace cskit::jio {

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Value Value::null() { return Value{}; }

Value Value::boolean(bool v) {
  Value out;
  out.kind = Kind::Bool;
  out.b = v;
  return out;
}

Value Value::integer(long long v) {
  Value out;
  out.kind = Kind::Int;
  out.i = v;
  return out;
}

Value Value::number(double v) {
  Value out;
  out.kind = Kind::Num;
  out.num = v;
  return out;
}

Value Value::string(std::string v) {
  Value out;
  out.kind = Kind::Str;
  out.str = std::move(v);
  return out;
}

Value Value::array(std::vector<Value> items) {
  Value out;
  out.kind = Kind::Arr;
  out.arr = std::move(items);
  return out;
}

Value Value::object() {
  Value out;
  out.kind = Kind::Obj;
  return out;
}

Value& Value::push(Value v) {
  arr.push_back(std::move(v));
  return *this;
}

Value& Value::set(const std::string& k, Value v) {
  obj.emplace_back(k, std::move(v));
  return *this;
}

namespace {

void escape_into(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_into(const Value& v, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  const std::string pad = pretty ? std::string(indent * (depth + 1), ' ') : "";
  const std::string pad_close = pretty ? std::string(indent * depth, ' ') : "";
  const char* nl = pretty ? "\n" : "";
  switch (v.kind) {
    case Value::Kind::Null: out += "null"; break;
    case Value::Kind::Bool: out += v.b ? "true" : "false"; break;
    case Value::Kind::Int: out += std::to_string(v.i); break;
    case Value::Kind::Num: out += num17(v.num); break;
    case Value::Kind::Str: escape_into(v.str, out); break;
    case Value::Kind::Arr: {
      if (v.arr.empty()) {
        out += "[]";
        break;
      }
      // Arrays of scalars stay on one line; nested structures get indented.
      bool scalar_only = true;
      for (const auto& item : v.arr)
        if (item.kind == Value::Kind::Arr || item.kind == Value::Kind::Obj)
          scalar_only = false;
      if (scalar_only || !pretty) {
        out += '[';
        for (std::size_t t = 0; t < v.arr.size(); ++t) {
          if (t) out += pretty ? ", " : ",";
          dump_into(v.arr[t], -1, 0, out);
        }
        out += ']';
      } else {
        out += '[';
        out += nl;
        for (std::size_t t = 0; t < v.arr.size(); ++t) {
          out += pad;
          dump_into(v.arr[t], indent, depth + 1, out);
          if (t + 1 < v.arr.size()) out += ',';
          out += nl;
        }
        out += pad_close;
        out += ']';
      }
      break;
    }
    case Value::Kind::Obj: {
      if (v.obj.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      out += nl;
      for (std::size_t t = 0; t < v.obj.size(); ++t) {
        out += pad;
        escape_into(v.obj[t].first, out);
        out += pretty ? ": " : ":";
        dump_into(v.obj[t].second, indent, depth + 1, out);
        if (t + 1 < v.obj.size()) out += ',';
        out += nl;
      }
      out += pad_close;
      out += '}';
      break;
    }
  }
}

}  // namespace

std::string Value::dump(int indent) const {
  std::string out;
  dump_into(*this, indent, 0, out);
  return out;
}

Value vec_to_json(const Vec& v) {
  Value out = Value::array();
  for (int i = 0; i < v.size(); ++i) out.push(Value::number(v(i)));
  return out;
}

Value mat_to_json(const Mat& m) {
  Value out = Value::array();
  for (int r = 0; r < m.rows(); ++r) {
    Value row = Value::array();
    for (int c = 0; c < m.cols(); ++c) row.push(Value::number(m(r, c)));
    out.push(std::move(row));
  }
  return out;
}

Value cmat_to_json(const CMat& m) {
  Value out = Value::array();
  for (int r = 0; r < m.rows(); ++r) {
    Value row = Value::array();
    for (int c = 0; c < m.cols(); ++c) {
      Value pair = Value::array();
      pair.push(Value::number(m(r, c).real()));
      pair.push(Value::number(m(r, c).imag()));
      row.push(std::move(pair));
    }
    out.push(std::move(row));
  }
  return out;
}

}  // namespace cskit::jio
