#ifndef CATWALK_TOOLS_JSON_IO_HPP
#define CATWALK_TOOLS_JSON_IO_HPP

#include <cstddef>

#include <json.hpp>

#include <catwalk/motzkin_bridge.hpp>
#include <catwalk/trees.hpp>
#include <catwalk/walks.hpp>

namespace catwalk::json_io
{

using json = nlohmann::ordered_json;

inline json to_json(const Walk &w)
{
    return json{{"origin", w.origin()}, {"steps", w.steps()}};
}

// Shapes are nested child lists: a leaf is [], a vertex lists its children.
inline json shape_json(const UBTree &t)
{
    const auto kids = t.children();
    auto rec = [&](auto &&self, std::size_t v) -> json {
        json arr = json::array();
        for (auto c : kids[v]) arr.push_back(self(self, c));
        return arr;
    };
    return rec(rec, 0);
}

inline json to_json(const LabeledTree &lt)
{
    return json{{"shape", shape_json(lt.shape)}, {"perm", lt.perm.values()}};
}

inline json to_json(const BinaryTree &t)
{
    if (t.is_leaf()) return json::array();
    return json::array({to_json(t.left()), to_json(t.right())});
}

inline json to_json(const DecoratedMotzkinWalk &d)
{
    json decs = json::array();
    for (const auto &p : d.decorations) decs.push_back(p.values());
    return json{{"steps", d.steps}, {"decorations", decs}};
}

} // namespace catwalk::json_io

#endif
