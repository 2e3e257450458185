#include <iostream>
int main() { std::cout << "mlc\n"; return 0; }
