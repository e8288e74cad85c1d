#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkit::cli {

namespace {

std::string scalar(const Doc& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat(const Doc& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Doc& e) { return e.is_primitive(); });
}

std::string inline_array(const Doc& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
  return s + "]";
}

void render_value(std::ostringstream& os, const Doc& v, const std::string& pad);

void render_object(std::ostringstream& os, const Doc& obj, const std::string& pad, std::string first_pad) {
  for (const auto& [key, v] : obj.items()) {
    os << first_pad << key << ":";
    first_pad = pad;
    if (v.is_primitive()) {
      os << " " << scalar(v) << "\n";
    } else if (flat(v)) {
      os << " " << inline_array(v) << "\n";
    } else if (v.empty()) {
      os << " {}\n";
    } else {
      os << "\n";
      render_value(os, v, pad + "  ");
    }
  }
}

void render_value(std::ostringstream& os, const Doc& v, const std::string& pad) {
  if (v.is_object()) {
    render_object(os, v, pad, pad);
    return;
  }
  for (const Doc& e : v) {
    if (e.is_object() && !e.empty()) {
      render_object(os, e, pad + "  ", pad + "- ");
    } else if (flat(e)) {
      os << pad << "- " << inline_array(e) << "\n";
    } else if (e.is_primitive()) {
      os << pad << "- " << scalar(e) << "\n";
    } else {
      os << pad << "-\n";
      render_value(os, e, pad + "  ");
    }
  }
}

}  // namespace

std::string render_text(const Doc& doc) {
  std::ostringstream os;
  render_value(os, doc, "");
  return os.str();
}

std::string render(const Doc& doc, bool json) { return json ? doc.dump(2) + "\n" : render_text(doc); }

}  // namespace hopfkit::cli
