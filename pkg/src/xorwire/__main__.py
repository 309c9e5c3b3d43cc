from xorwire.cli import main

main()
