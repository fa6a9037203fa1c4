#pragma once

namespace dt {
class VirtualCharacter;
}
