a = 1;
a += 2;
a -= 3;
a *= 4;
a /= 5;
a %= 6;
a <<= 1;
a >>= 1;
a >>>= 1;
a &= 0xf;
a |= 0x10;
a ^= 0x3;
a = b = c = 0;
